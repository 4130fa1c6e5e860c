#pragma once

#include <optional>
#include <vector>

#include "wres/invariants.hpp"
#include "wres/residue.hpp"

namespace wres {

enum class CaseId {
    PhiA,
    PhiB1,
    PhiB2,
    PhiB3,
    PhiB4,
    PhiB5_A1,
    PhiB5_A2,
    PhiB5_A3,
    PsiA,
    PsiB1,
    PsiB2,
    PsiB3,
    PsiB4_B1,
    PsiB4_B2,
    PsiB4_B3,
    PsiB5_C1,
    PsiB5_C2,
};

inline constexpr std::array<CaseId, 17> kAllCases = {
    CaseId::PhiA,     CaseId::PhiB1,    CaseId::PhiB2,    CaseId::PhiB3,    CaseId::PhiB4,
    CaseId::PhiB5_A1, CaseId::PhiB5_A2, CaseId::PhiB5_A3, CaseId::PsiA,     CaseId::PsiB1,
    CaseId::PsiB2,    CaseId::PsiB3,    CaseId::PsiB4_B1, CaseId::PsiB4_B2, CaseId::PsiB4_B3,
    CaseId::PsiB5_C1, CaseId::PsiB5_C2};

std::string case_name(CaseId id);
CaseId case_from_name(const std::string& name);
/// Source-table anchor label shipped with each case entry.
std::string case_anchor(CaseId id);
/// True for the cases belonging to the first (Phi) functional.
bool is_phi_case(CaseId id);
/// True for the sub-cases that enter the Phi^b / Psi^b totals.
bool in_b_total(CaseId id);

struct TraceStep {
    std::string label;
    std::string text;
};
struct CaseTrace {
    std::vector<TraceStep> steps;
    std::string render(CaseId id) const;
};

struct CaseResult {
    CaseId id;
    InvariantCombo computed;
    CaseTrace trace;
};

/// Assembles the case's density term from the symbol library, evaluates it,
/// and projects onto the invariant basis, recording a step-by-step trace.
CaseResult compute_case(CaseId id);

/// The density term (symbols included) that a case evaluates.
DensityTerm case_density_term(CaseId id);

struct DensityIndices {
    int r, l, k, j, alpha;
    friend bool operator==(const DensityIndices&, const DensityIndices&) = default;
};
/// All index tuples satisfying r+l-k-j-|alpha| = -3 with r, l bounded above
/// by the leading orders of the two factors.
std::vector<DensityIndices> enumerate_cases(int left_order, int right_order);

InvariantCombo assemble_total(const std::vector<InvariantCombo>& parts);

}  // namespace wres
