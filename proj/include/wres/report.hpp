#pragma once

#include <map>
#include <optional>

#include "wres/cases.hpp"

namespace wres {

inline constexpr const char* kEngineVersion = "wres 1.0.0";

struct RunConfig {
    std::vector<CaseId> cases;  // empty means ALL
    Basis basis = Basis::Hprime;
    std::string format = "json";  // json | md | csv
    std::string out_path;         // empty means stdout
    std::string expected_path = "expected/paper.json";
    std::string allowlist_path = "expected/allowlist.json";
    bool numeric_check = false;
    int samples = 1000000;
    double tol = 1e-9;
    uint64_t seed = 1;
};

struct ExpectedEntry {
    InvariantCombo combo;
    std::string anchor;
};

struct ExpectedTable {
    std::map<CaseId, ExpectedEntry> cases;
    ExpectedEntry phiB_total, psiB_total;
    ExpectedEntry thm1_K, thm2_K;      // theorem boundary rows, K basis
    Rational thm2_printed_S2K;         // as printed (differs from substitution)
};
ExpectedTable load_expected(const std::string& path);

struct AllowlistEntry {
    CaseId id;
    InvariantCombo accepted_computed;
    std::string trace_path;
    std::string note;
};
std::vector<AllowlistEntry> load_allowlist(const std::string& path);

struct CaseRow {
    CaseId id;
    InvariantCombo computed;
    InvariantCombo expected;
    bool match = false;
    bool accepted = false;  // mismatch covered by an audited allowlist entry
    std::string anchor;
    std::string note;
};

struct NumericCaseRow {
    CaseId id;
    int kernels = 0;
    double max_rel_err = 0.0;
    bool pass = true;
};

struct Report {
    std::string engine_version = kEngineVersion;
    RunConfig config;
    std::vector<CaseRow> rows;
    InvariantCombo phiB_computed, psiB_computed;
    InvariantCombo phiB_expected, psiB_expected;
    bool phiB_match = false, psiB_match = false;
    // theorem-level summaries (boundary part; interior displayed verbatim)
    InvariantCombo thm1_computed_h, thm1_computed_K, thm1_expected_h, thm1_expected_K;
    InvariantCombo thm2_computed_h, thm2_computed_K, thm2_expected_h, thm2_expected_K;
    Rational thm2_printed_S2K;
    bool thm2_s2_tension = false;
    std::vector<NumericCaseRow> numeric;
    std::vector<MomentIndex> mc_checked;
    bool mc_pass = true;
    int exit_code = 0;  // 0 all match/accepted; 2 unaccepted discrepancies

    std::string render_json() const;
    std::string render_md() const;
    std::string render_csv() const;
    std::string render(const std::string& format) const;
};

Report run(const RunConfig& config);

/// Renders and writes the report; returns the report's exit code.
int run_and_write(const RunConfig& config);

std::string render_trace(CaseId id);
void write_file(const std::string& path, const std::string& content);

}  // namespace wres
