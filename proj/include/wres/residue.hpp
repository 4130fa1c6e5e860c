#pragma once

#include "wres/symbols.hpp"

namespace wres {

struct MomentIndex {
    int a1 = 0, a2 = 0, a3 = 0;
    int total() const { return a1 + a2 + a3; }
    bool any_odd() const { return (a1 | a2 | a3) & 1; }
};

/// Exact moment of the unit 2-sphere in R^3:
/// 0 for any odd exponent, else 4 pi prod (a_t - 1)!! / (|a| + 1)!!.
PiScalar sphere_moment(const MomentIndex& m);

XiRational pi_plus(const XiRational& f);
CliffordMatrix pi_plus(const CliffordMatrix& m);
FormalPoly integrate_line(const XiRational& f);

/// Integrates every xi'-monomial of the polynomial over the unit sphere.
FormalPoly apply_sphere_moments(const FormalPoly& p);

/// One summand of the boundary density: indices (r, l, k, j, |alpha|)
/// subject to r + l - k - j - |alpha| = -3, plus the two symbol factors.
struct DensityTerm {
    int r = 0, l = 0, k = 0, j = 0, alpha = 0;
    GradedSymbol left;
    GradedSymbol right;
};
void check_selection_rule(const DensityTerm& t);

/// Traced integrand, density prefactor included:
/// (-i)^{|a|+j+k+1}/(a!(j+k+1)!) tr[pi^+ d^k_xi d^j_xn (left) x d^{j+1}_xi d^k_xn (right)].
XiRational density_integrand(const DensityTerm& t);

/// Full evaluation: xi_n line integral, then sphere moments.
FormalPoly density_term_value(const DensityTerm& t);

/// Per-monomial kernels of an integrand (for derivation traces and the
/// numeric cross-check); summing kernel-integrals times moments reproduces
/// density_term_value.
struct KernelTerm {
    Monomial mono;       // full parameter monomial including xi factors
    XiRational kernel;   // constant-coefficient rational function of xi_n
};
std::vector<KernelTerm> split_kernels(const XiRational& integrand);

}  // namespace wres
