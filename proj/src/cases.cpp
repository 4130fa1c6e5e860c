#include "wres/cases.hpp"

#include <map>

namespace wres {

namespace {

struct CaseMeta {
    CaseId id;
    const char* name;
    const char* anchor;
    bool phi;
    bool b_total;
};

const CaseMeta kMeta[] = {
    {CaseId::PhiA, "PhiA", "Eq. (iiii)", true, false},
    {CaseId::PhiB1, "PhiB1", "Sec. 4.2 case a) I", true, true},
    {CaseId::PhiB2, "PhiB2", "Eq. (35)", true, true},
    {CaseId::PhiB3, "PhiB3", "Eq. (3ll5)", true, true},
    {CaseId::PhiB4, "PhiB4", "Eq. (39)", true, true},
    {CaseId::PhiB5_A1, "PhiB5_A1", "Eq. (65)", true, true},
    {CaseId::PhiB5_A2, "PhiB5_A2", "Sec. 4.2 case c), A_2 block", true, true},
    {CaseId::PhiB5_A3, "PhiB5_A3", "Sec. 4.2 case c), A_3 block", true, true},
    {CaseId::PsiA, "PsiA", "Eq. (1iiii)", false, false},
    {CaseId::PsiB1, "PsiB1", "Sec. 5.2 case a) I", false, true},
    {CaseId::PsiB2, "PsiB2", "Eq. (135)", false, true},
    {CaseId::PsiB3, "PsiB3", "Eq. (13ll5)", false, true},
    {CaseId::PsiB4_B1, "PsiB4_B1", "Sec. 5.2 case b), B_1 block", false, true},
    {CaseId::PsiB4_B2, "PsiB4_B2", "Sec. 5.2 case b), B_2 block", false, true},
    {CaseId::PsiB4_B3, "PsiB4_B3", "Sec. 5.2 case b), B_3 block", false, true},
    {CaseId::PsiB5_C1, "PsiB5_C1", "Sec. 5.2 case c), C_1 block", false, true},
    {CaseId::PsiB5_C2, "PsiB5_C2", "Sec. 5.2 case c), C_2 block", false, true},
};

const CaseMeta& meta(CaseId id) {
    for (auto& m : kMeta)
        if (m.id == id) return m;
    throw Error("unknown case id");
}

/// All composed symbols used by the seventeen cases, built once.
struct SymbolTable {
    GradedSymbol dinv_m1 = sigma_D_inv(-1);
    DinvOrder2Split dinv_m2 = sigma_D_inv_m2_split();
    GradedSymbol dsq_m2 = sigma_Dsq_inv(-2);
    GradedSymbol dsq_m3 = sigma_Dsq_inv(-3);
    GradedSymbol nv1, nv0;
    Jet<CliffordMatrix> m2cw = minus_two_c_w();
    CliffordMatrix k0 = k0_prefactor();

    // -2c(w) nabla_v D^{-1} at orders 0 and -1 (the -1 order kept as the
    // composition pieces A1/A2/A3); -2c(w) nabla_v D^{-2} at orders -1, -2
    GradedSymbol phi_left0;
    GradedSymbol phiA1, phiA2, phiA3;
    GradedSymbol psi_left_m1;
    GradedSymbol psiB1, psiB2, psiB3;
    GradedSymbol phiA_left, psiA_left;

    SymbolTable() {
        auto nv = sigma_nabla_v();
        nv1 = nv.first;
        nv0 = nv.second;
        std::vector<GradedSymbol> nvs = {nv1, nv0};
        std::vector<GradedSymbol> dinv = {dinv_m1, dinv_m2.full};
        std::vector<GradedSymbol> dsq = {dsq_m2, dsq_m3};

        phi_left0 = premultiply(m2cw, compose(nvs, dinv, 0));
        for (auto& term : compose_terms(nvs, dinv, -1)) {
            GradedSymbol piece = premultiply(m2cw, {-1, term.value, false});
            if (term.left_order == 1 && term.right_order == -2 && term.alpha_n == 0)
                phiA1 = piece;
            else if (term.left_order == 0 && term.right_order == -1 && term.alpha_n == 0)
                phiA2 = piece;
            else if (term.left_order == 1 && term.right_order == -1 && term.alpha_n == 1)
                phiA3 = piece;
            else
                throw Error("unexpected composition term for sigma_{-1}(-2c(w) nabla_v D^{-1})");
        }
        psi_left_m1 = premultiply(m2cw, compose(nvs, dsq, -1));
        for (auto& term : compose_terms(nvs, dsq, -2)) {
            GradedSymbol piece = premultiply(m2cw, {-2, term.value, false});
            if (term.left_order == 0 && term.right_order == -2 && term.alpha_n == 0)
                psiB1 = piece;
            else if (term.left_order == 1 && term.right_order == -3 && term.alpha_n == 0)
                psiB2 = piece;
            else if (term.left_order == 1 && term.right_order == -2 && term.alpha_n == 1)
                psiB3 = piece;
            else
                throw Error("unexpected composition term for sigma_{-2}(-2c(w) nabla_v D^{-2})");
        }
        phiA_left = {-1, Jet<CliffordMatrix>(k0 * dinv_m1.term.value), false};
        psiA_left = {-2, Jet<CliffordMatrix>(k0 * dsq_m2.term.value), false};
    }
};

const SymbolTable& symbols() {
    static const SymbolTable t;
    return t;
}

std::string describe_left(CaseId id) {
    switch (id) {
        case CaseId::PhiA: return "sigma_{-1}(sum_j c(w) c_j c(nabla_{e_j} v) D^{-1}) = K0 * sigma_{-1}(D^{-1})";
        case CaseId::PhiB1:
        case CaseId::PhiB2:
        case CaseId::PhiB3:
        case CaseId::PhiB4: return "sigma_0(-2 c(w) nabla_v D^{-1}) = -2 c(w) sigma_1(nabla_v) sigma_{-1}(D^{-1})";
        case CaseId::PhiB5_A1: return "A_1 = -2 c(w) sigma_1(nabla_v) sigma_{-2}(D^{-1})";
        case CaseId::PhiB5_A2: return "A_2 = -2 c(w) A(v) sigma_{-1}(D^{-1})";
        case CaseId::PhiB5_A3: return "A_3 = -2 c(w) d_xi sigma_1(nabla_v) . D_xn sigma_{-1}(D^{-1})";
        case CaseId::PsiA: return "sigma_{-2}(sum_j c(w) c_j c(nabla_{e_j} v) D^{-2}) = K0 * sigma_{-2}(D^{-2})";
        case CaseId::PsiB1:
        case CaseId::PsiB2:
        case CaseId::PsiB3: return "sigma_{-1}(-2 c(w) nabla_v D^{-2}) = -2 c(w) sigma_1(nabla_v) sigma_{-2}(D^{-2})";
        case CaseId::PsiB4_B1: return "B_1 = -2 c(w) A(v) sigma_{-2}(D^{-2})";
        case CaseId::PsiB4_B2: return "B_2 = -2 c(w) sigma_1(nabla_v) sigma_{-3}(D^{-2})";
        case CaseId::PsiB4_B3: return "B_3 = -2 c(w) d_xi sigma_1(nabla_v) . D_xn sigma_{-2}(D^{-2})";
        case CaseId::PsiB5_C1:
        case CaseId::PsiB5_C2: return "sigma_{-1}(-2 c(w) nabla_v D^{-2})";
    }
    return "";
}

std::string describe_right(CaseId id) {
    switch (id) {
        case CaseId::PhiA:
        case CaseId::PhiB1:
        case CaseId::PhiB2:
        case CaseId::PhiB3:
        case CaseId::PhiB5_A1:
        case CaseId::PhiB5_A2:
        case CaseId::PhiB5_A3: return "sigma_{-2}(D^{-2}) = 1/(1+xi_n^2)";
        case CaseId::PhiB4: return "sigma_{-3}(D^{-2})";
        case CaseId::PsiA:
        case CaseId::PsiB1:
        case CaseId::PsiB2:
        case CaseId::PsiB3:
        case CaseId::PsiB4_B1:
        case CaseId::PsiB4_B2:
        case CaseId::PsiB4_B3: return "sigma_{-1}(D^{-1}) = i c(xi)/(1+xi_n^2)";
        case CaseId::PsiB5_C1: return "sigma_{-2}(D^{-1}), Q_0^2 + metric-derivative part (C_1)";
        case CaseId::PsiB5_C2: return "sigma_{-2}(D^{-1}), Q_0^1 part (C_2)";
    }
    return "";
}

}  // namespace

std::string case_name(CaseId id) { return meta(id).name; }

CaseId case_from_name(const std::string& name) {
    for (auto& m : kMeta)
        if (name == m.name) return m.id;
    throw Error("unknown case id '" + name + "'");
}

std::string case_anchor(CaseId id) { return meta(id).anchor; }
bool is_phi_case(CaseId id) { return meta(id).phi; }
bool in_b_total(CaseId id) { return meta(id).b_total; }

DensityTerm case_density_term(CaseId id) {
    const SymbolTable& t = symbols();
    switch (id) {
        case CaseId::PhiA: return {-1, -2, 0, 0, 0, t.phiA_left, t.dsq_m2};
        case CaseId::PhiB1: return {0, -2, 0, 0, 1, t.phi_left0, t.dsq_m2};
        case CaseId::PhiB2: return {0, -2, 0, 1, 0, t.phi_left0, t.dsq_m2};
        case CaseId::PhiB3: return {0, -2, 1, 0, 0, t.phi_left0, t.dsq_m2};
        case CaseId::PhiB4: return {0, -3, 0, 0, 0, t.phi_left0, t.dsq_m3};
        case CaseId::PhiB5_A1: return {-1, -2, 0, 0, 0, t.phiA1, t.dsq_m2};
        case CaseId::PhiB5_A2: return {-1, -2, 0, 0, 0, t.phiA2, t.dsq_m2};
        case CaseId::PhiB5_A3: return {-1, -2, 0, 0, 0, t.phiA3, t.dsq_m2};
        case CaseId::PsiA: return {-2, -1, 0, 0, 0, t.psiA_left, t.dinv_m1};
        case CaseId::PsiB1: return {-1, -1, 0, 0, 1, t.psi_left_m1, t.dinv_m1};
        case CaseId::PsiB2: return {-1, -1, 0, 1, 0, t.psi_left_m1, t.dinv_m1};
        case CaseId::PsiB3: return {-1, -1, 1, 0, 0, t.psi_left_m1, t.dinv_m1};
        case CaseId::PsiB4_B1: return {-2, -1, 0, 0, 0, t.psiB1, t.dinv_m1};
        case CaseId::PsiB4_B2: return {-2, -1, 0, 0, 0, t.psiB2, t.dinv_m1};
        case CaseId::PsiB4_B3: return {-2, -1, 0, 0, 0, t.psiB3, t.dinv_m1};
        case CaseId::PsiB5_C1: return {-1, -2, 0, 0, 0, t.psi_left_m1, t.dinv_m2.metric_part};
        case CaseId::PsiB5_C2: return {-1, -2, 0, 0, 0, t.psi_left_m1, t.dinv_m2.q01_part};
    }
    throw Error("unknown case id");
}

std::string CaseTrace::render(CaseId id) const {
    std::string out = "derivation trace: " + case_name(id) + "\n";
    out += "anchor: " + case_anchor(id) + "\n";
    out += std::string(64, '-') + "\n";
    for (auto& s : steps) {
        out += s.label + ":\n";
        out += "  " + s.text + "\n";
    }
    return out;
}

CaseResult compute_case(CaseId id) {
    DensityTerm t = case_density_term(id);
    CaseResult out;
    out.id = id;
    CaseTrace& tr = out.trace;
    tr.steps.push_back({"density indices (r, l, k, j, |alpha|); rule r+l-k-j-|alpha| = -3",
                        "(" + std::to_string(t.r) + ", " + std::to_string(t.l) + ", " +
                            std::to_string(t.k) + ", " + std::to_string(t.j) + ", " +
                            std::to_string(t.alpha) + ")"});
    tr.steps.push_back({"left symbol", describe_left(id)});
    tr.steps.push_back({"right factor", describe_right(id)});

    XiRational integrand = density_integrand(t);
    if (t.alpha > 0) {
        tr.steps.push_back({"tangential derivative",
                            "d^alpha_{x'} of the metric right factor vanishes at x0; term = 0"});
        out.computed = project_to_invariants(FormalPoly::zero());
        return out;
    }
    tr.steps.push_back(
        {"traced integrand (pi^+ applied to the left factor, prefactor included)",
         integrand.str()});

    FormalPoly after_line = integrand.integrate_line();
    for (auto& kt : split_kernels(integrand)) {
        FormalPoly val = kt.kernel.integrate_line();
        tr.steps.push_back({"xi_n line integral on the " + kt.mono.str() + " kernel",
                            "integral of " + kt.kernel.str() + " dxi_n = " + val.str()});
    }
    tr.steps.push_back({"line integral total (2 pi i x residue at xi_n = i)", after_line.str()});

    FormalPoly after_moments = apply_sphere_moments(after_line);
    tr.steps.push_back({"after sphere moments over |xi'| = 1", after_moments.str()});

    out.computed = project_to_invariants(after_moments);
    tr.steps.push_back({"projection onto the invariant basis", out.computed.str()});
    return out;
}

std::vector<DensityIndices> enumerate_cases(int left_order, int right_order) {
    std::vector<DensityIndices> out;
    for (int r = left_order; r >= -3 - right_order; --r)
        for (int l = right_order; l >= -3 - left_order; --l) {
            int s = r + l + 3;  // = k + j + |alpha|
            if (s < 0) continue;
            for (int alpha = s; alpha >= 0; --alpha)
                for (int j = s - alpha; j >= 0; --j) out.push_back({r, l, s - alpha - j, j, alpha});
        }
    return out;
}

InvariantCombo assemble_total(const std::vector<InvariantCombo>& parts) {
    InvariantCombo total;
    for (auto& p : parts) total = total + p;
    return total;
}

}  // namespace wres
