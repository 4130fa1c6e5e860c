// Command-line front end: runs the boundary-case verification, dumps the
// expected table, and writes per-case derivation traces.
#include <iostream>

#include <CLI11.hpp>

#include "wres/report.hpp"

namespace {

int cmd_check(const wres::RunConfig& config) { return wres::run_and_write(config); }

int cmd_table(const std::string& expected_path) {
    wres::ExpectedTable table = wres::load_expected(expected_path);
    for (auto id : wres::kAllCases) {
        auto& e = table.cases.at(id);
        std::cout << wres::case_name(id) << ": " << e.combo.str() << "    [" << e.anchor << "]\n";
    }
    std::cout << "PhiB total: " << table.phiB_total.combo.str() << "    ["
              << table.phiB_total.anchor << "]\n";
    std::cout << "PsiB total: " << table.psiB_total.combo.str() << "    ["
              << table.psiB_total.anchor << "]\n";
    std::cout << "Theorem I (K basis): " << table.thm1_K.combo.str() << "    ["
              << table.thm1_K.anchor << "]\n";
    std::cout << "Theorem II (K basis): " << table.thm2_K.combo.str() << "    ["
              << table.thm2_K.anchor << "]\n";
    return 0;
}

int cmd_trace(const std::string& case_id, const std::string& out_path) {
    std::string text = wres::render_trace(wres::case_from_name(case_id));
    if (out_path.empty())
        std::cout << text;
    else
        wres::write_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of noncommutative-residue boundary terms"};
    app.require_subcommand(1);

    wres::RunConfig config;
    std::vector<std::string> case_names;
    bool all = false;
    std::string basis = "hprime";

    CLI::App* check = app.add_subcommand("check", "run cases and compare with the expected table");
    check->add_option("--case", case_names, "case id (repeatable)");
    check->add_flag("--all", all, "run all cases (default when no --case given)");
    check->add_option("--basis", basis, "presentation basis: hprime|K")
        ->check(CLI::IsMember({"hprime", "K"}));
    check->add_option("--format", config.format, "output format: json|md|csv")
        ->check(CLI::IsMember({"json", "md", "csv"}));
    check->add_option("--out", config.out_path, "output path (default stdout)");
    check->add_option("--expected", config.expected_path, "expected table path");
    check->add_option("--allowlist", config.allowlist_path, "allowlist path");
    check->add_flag("--numeric-check", config.numeric_check,
                    "cross-check line integrals by quadrature and moments by Monte Carlo");
    check->add_option("--samples", config.samples, "Monte Carlo samples");
    check->add_option("--tol", config.tol, "numeric tolerance");
    check->add_option("--seed", config.seed, "random seed");

    std::string table_expected = "expected/paper.json";
    CLI::App* table = app.add_subcommand("table", "dump the expected table");
    table->add_option("--expected", table_expected, "expected table path");

    std::string trace_case, trace_out;
    CLI::App* trace = app.add_subcommand("trace", "write a case derivation trace");
    trace->add_option("case", trace_case, "case id")->required();
    trace->add_option("--out", trace_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            config.basis = (basis == "K") ? wres::Basis::K : wres::Basis::Hprime;
            if (!all)
                for (auto& name : case_names) config.cases.push_back(wres::case_from_name(name));
            if (config.samples <= 0 || config.tol <= 0)
                throw wres::Error("check: samples and tol must be positive");
            return cmd_check(config);
        }
        if (table->parsed()) return cmd_table(table_expected);
        if (trace->parsed()) return cmd_trace(trace_case, trace_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
