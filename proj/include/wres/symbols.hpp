#pragma once

#include <utility>
#include <vector>

#include "wres/clifford.hpp"
#include "wres/jet.hpp"

namespace wres {

/// One homogeneous component of a symbol expansion, instantiated at the
/// boundary point with |xi'| = 1.  The order tag is bookkeeping for the case
/// enumeration (homogeneity itself is destroyed by the restriction).
/// `metric` marks symbols derived purely from the metric, whose tangential
/// x'-derivatives vanish identically at x0.
struct GradedSymbol {
    int order = 0;
    Jet<CliffordMatrix> term;
    bool metric = false;
};

// building blocks at x0, |xi'| = 1
FormalPoly hprime_poly();                 // h = h'(0)
Jet<CliffordMatrix> c_xi_prime_jet();     // c(xi'), d/dxn = (1/2) h c(xi')
Jet<CliffordMatrix> c_dxn_jet();          // c(dx_n), constant
Jet<CliffordMatrix> c_xi_jet();           // c(xi') + xi_n c(dx_n)
Jet<XiRational> inv_norm_jet(int k);      // 1/(1+xi_n^2)^k, d/dxn = -k h/(1+xi_n^2)^{k+1}
Jet<CliffordMatrix> c_w_jet();            // c(w), d/dxn = c(Dw)

// metric x_n-derivative rules (tangential rules are identically zero)
FormalPoly dxn_norm_sq_rule();            // d/dxn |xi|^2 -> h at |xi'| = 1
CliffordMatrix dxn_c_xi_prime_rule();     // d/dxn c(xi') -> (1/2) h c(xi')
FormalPoly dx_tangential_rule();          // 0

/// Connection data of the collar metric at x0, with the omega values fixed by
/// joint consistency of the sigma^k and Q_0^2 identities.
struct ConnectionConstants {
    FormalPoly gamma_n;                      // (5/2) h
    std::array<CliffordMatrix, 3> sigma_k;   // (1/4) h c_k c_4
    std::array<CliffordMatrix, 3> a_k;       // -(1/4) h chat_k chat_4
    CliffordMatrix q01;                      // (1/4) sum omega_{st}(e_i) c_i chat_s chat_t
    CliffordMatrix q02;                      // -(1/4) sum omega_{st}(e_i) c_i c_s c_t
    CliffordMatrix sigma0_D;                 // q01 + q02
    /// omega_{s,t}(e_i) at x0; antisymmetric in (s,t)
    FormalPoly omega(int i, int s, int t) const;
};
const ConnectionConstants& connection_constants();

// symbol library
GradedSymbol sigma_D_inv(int order);       // order in {-1, -2}
GradedSymbol sigma_Dsq_inv(int order);     // order in {-2, -3}

/// sigma_{-2}(D^{-1}) split into the Q_0^1 sandwich and the rest (Q_0^2
/// sandwich plus the metric-derivative piece); full = q01_part + metric_part.
struct DinvOrder2Split {
    GradedSymbol q01_part;
    GradedSymbol metric_part;
    GradedSymbol full;
};
const DinvOrder2Split& sigma_D_inv_m2_split();

/// {order 1, order 0} symbols of nabla_v: i(sum v_j xi_j + v_4 xi_n) and A(v).
std::pair<GradedSymbol, GradedSymbol> sigma_nabla_v();
CliffordMatrix a_of_v();

enum class PrefactorKind { K0, MinusTwoCw };
CliffordMatrix clifford_prefactor(PrefactorKind kind);
CliffordMatrix k0_prefactor();            // sum_j c(w) c_j c(nabla_{e_j} v)
Jet<CliffordMatrix> minus_two_c_w();

/// Leading symbol p_1 = i c(xi) of the operator itself (for recursion checks).
Jet<CliffordMatrix> p1_jet();

/// One contribution to a symbol composition at x0: the pair of factor orders
/// and the xi_n-direction multi-index (0 or 1; tangential terms vanish).
struct ComposeTerm {
    int left_order;
    int right_order;
    int alpha_n;
    Jet<CliffordMatrix> value;
};

/// Composition sigma(A o B) at target order, keeping only terms that survive
/// at x0 (tangential derivatives of the right factors vanish; they must be
/// metric symbols).  Throws if the supplied expansions would require an
/// |alpha| >= 2 term.
std::vector<ComposeTerm> compose_terms(const std::vector<GradedSymbol>& left,
                                       const std::vector<GradedSymbol>& right, int target_order);
GradedSymbol compose(const std::vector<GradedSymbol>& left,
                     const std::vector<GradedSymbol>& right, int target_order);

/// Left-multiplication by an order-0, xi-independent matrix factor.
GradedSymbol premultiply(const Jet<CliffordMatrix>& factor, const GradedSymbol& s);

}  // namespace wres
