#include "wres/residue.hpp"

#include <map>

namespace wres {

namespace {

Rational double_factorial(int n) {
    // (-1)!! = 1
    Rational out(1);
    for (int k = n; k >= 2; k -= 2) out *= k;
    return out;
}

const GaussianRational kI = GaussianRational::i();

}  // namespace

PiScalar sphere_moment(const MomentIndex& m) {
    if (m.any_odd()) return PiScalar();
    Rational num = double_factorial(m.a1 - 1) * double_factorial(m.a2 - 1) *
                   double_factorial(m.a3 - 1);
    Rational coeff = Rational(4) * num / double_factorial(m.total() + 1);
    return PiScalar(GaussianRational(coeff), 1);
}

XiRational pi_plus(const XiRational& f) { return f.pi_plus(); }
CliffordMatrix pi_plus(const CliffordMatrix& m) { return m.pi_plus(); }
FormalPoly integrate_line(const XiRational& f) { return f.integrate_line(); }

FormalPoly apply_sphere_moments(const FormalPoly& p) {
    FormalPoly out;
    for (auto& [m, c] : p.terms()) {
        auto [xi, rest] = m.split_xi();
        PiScalar mom = sphere_moment({xi[0], xi[1], xi[2]});
        if (mom.is_zero()) continue;
        out = out + FormalPoly::constant(c * mom).times_monomial(rest);
    }
    return out;
}

void check_selection_rule(const DensityTerm& t) {
    if (t.r + t.l - t.k - t.j - t.alpha != -3)
        throw Error("DensityTerm: selection rule r+l-k-j-|alpha| = -3 violated");
    if (t.j < 0 || t.j > 1 || t.k < 0 || t.k > 1 || t.alpha < 0)
        throw Error("DensityTerm: indices out of the supported jet range");
}

XiRational density_integrand(const DensityTerm& t) {
    check_selection_rule(t);
    if (t.alpha > 0) {
        // the right factor receives d^alpha_{x'}, identically zero at x0 for
        // metric symbols; non-metric right factors never occur here
        if (!t.right.metric)
            throw Error("density_integrand: tangential derivative of non-metric right factor");
        return XiRational::zero();
    }
    CliffordMatrix L = (t.j == 0) ? t.left.term.value : t.left.term.dxn_or_throw();
    for (int n = 0; n < t.k; ++n) L = L.d_xi();
    L = L.pi_plus();
    CliffordMatrix R = (t.k == 0) ? t.right.term.value : t.right.term.dxn_or_throw();
    for (int n = 0; n < t.j + 1; ++n) R = R.d_xi();

    // (-i)^{j+k+1} / (j+k+1)!
    GaussianRational pref(1);
    for (int n = 0; n < t.j + t.k + 1; ++n) pref = pref * (-kI);
    Rational fact(1);
    for (int n = 2; n <= t.j + t.k + 1; ++n) fact *= n;
    pref = pref * GaussianRational(Rational(1) / fact);

    return (L * R).trace().scaled(pref);
}

FormalPoly density_term_value(const DensityTerm& t) {
    XiRational integrand = density_integrand(t);
    if (integrand.is_zero()) return FormalPoly::zero();
    return apply_sphere_moments(integrand.integrate_line());
}

std::vector<KernelTerm> split_kernels(const XiRational& f) {
    std::map<Monomial, std::vector<FormalPoly>> kernels;
    const auto& num = f.num();
    for (size_t deg = 0; deg < num.size(); ++deg)
        for (auto& [m, c] : num[deg].terms()) {
            auto& vec = kernels[m];
            if (vec.size() <= deg) vec.resize(deg + 1);
            vec[deg] = vec[deg] + FormalPoly::constant(c);
        }
    std::vector<KernelTerm> out;
    out.reserve(kernels.size());
    for (auto& [m, coeffs] : kernels)
        out.push_back({m, XiRational::with_poles(coeffs, f.pole_plus(), f.pole_minus())});
    return out;
}

}  // namespace wres
