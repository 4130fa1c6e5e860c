#include <doctest.h>

#include "wres/cases.hpp"
#include "wres/numeric.hpp"

using namespace wres;

namespace {

FormalPoly P(ParamId p) { return FormalPoly::parameter(p); }

FormalPoly pi_const(long n, long d, int power) {
    return FormalPoly::constant(PiScalar(GaussianRational(Rational(n, d)), power));
}

}  // namespace

TEST_CASE("pi^+ anchors") {
    // pi^+(1/(1+xi_n^2)) = -i/(2(xi_n - i))
    XiRational f = XiRational::inv_norm_sq(1);
    XiRational want = XiRational::with_poles(
        {FormalPoly::constant(GaussianRational(Rational(0), Rational(-1, 2)))}, 1, 0);
    CHECK(pi_plus(f) == want);

    // pi^+(xi_n^2/(1+xi_n^2)) = i/(2(xi_n - i))
    XiRational g = XiRational::with_poles(
        {FormalPoly::zero(), FormalPoly::zero(), FormalPoly::one()}, 1, 1);
    XiRational want2 = XiRational::with_poles(
        {FormalPoly::constant(GaussianRational(Rational(0), Rational(1, 2)))}, 1, 0);
    CHECK(pi_plus(g) == want2);

    // polynomials have no pole at +i
    CHECK(pi_plus(XiRational::xin() * XiRational::xin()).is_zero());
}

TEST_CASE("pi^+ is linear and idempotent; complement has no +i pole") {
    Rng rng(0xfeed);
    for (int it = 0; it < 500; ++it) {
        XiRational f = random_xi_rational(rng);
        XiRational g = random_xi_rational(rng);
        XiRational pf = pi_plus(f);
        CHECK(pi_plus(pf) == pf);
        CHECK(pi_plus(f + g) == pf + pi_plus(g));
        CHECK((f - pf).pole_plus() == 0);
    }
}

TEST_CASE("line integral anchors") {
    CHECK(integrate_line(XiRational::inv_norm_sq(1)) == pi_const(1, 1, 1));

    // xi_n/((xi_n - i)(1+xi_n^2)^2) integrates to pi/8
    XiRational f = XiRational::with_poles({FormalPoly::zero(), FormalPoly::one()}, 3, 2);
    CHECK(integrate_line(f) == pi_const(1, 8, 1));

    // non-integrable: 1/(xi_n - i)
    XiRational bad = XiRational::with_poles({FormalPoly::one()}, 1, 0);
    CHECK_THROWS_AS(integrate_line(bad), Error);

    // pole only at -i: contour closes in the upper half-plane, integral 0
    XiRational lower = XiRational::with_poles({FormalPoly::one()}, 0, 2);
    CHECK(integrate_line(lower).is_zero());
}

TEST_CASE("quadrature oracle for the line integral") {
    Rng rng(0x5eed);
    int healthy = 0;
    for (int it = 0; it < 100; ++it) {
        XiRational f = random_decaying_xi_rational(rng);
        QuadCheck qc = check_line_integral(f, {});
        CHECK(qc.rel_err <= 1e-9);
        if (std::abs(qc.symbolic) > 1e-6) ++healthy;
    }
    CHECK(healthy > 80);  // the sample actually exercises nonzero integrals
}

TEST_CASE("sphere moment anchors") {
    CHECK(sphere_moment({0, 0, 0}) == PiScalar(GaussianRational(4), 1));
    CHECK(sphere_moment({2, 0, 0}) == PiScalar(GaussianRational(Rational(4, 3)), 1));
    CHECK(sphere_moment({0, 2, 0}) == PiScalar(GaussianRational(Rational(4, 3)), 1));
    CHECK(sphere_moment({1, 1, 0}).is_zero());
    CHECK(sphere_moment({1, 0, 0}).is_zero());
    CHECK(sphere_moment({2, 2, 0}) == PiScalar(GaussianRational(Rational(4, 15)), 1));
    CHECK(sphere_moment({4, 0, 0}) == PiScalar(GaussianRational(Rational(4, 5)), 1));
}

TEST_CASE("sphere moments agree with monte carlo within 3 sigma") {
    for (int a1 = 0; a1 <= 6; ++a1)
        for (int a2 = 0; a2 + a1 <= 6; ++a2)
            for (int a3 = 0; a3 + a2 + a1 <= 6; ++a3) {
                MomentIndex m{a1, a2, a3};
                auto est = sphere_moment_mc(m, 200000, 0x600dcafe + a1 * 49 + a2 * 7 + a3);
                double exact = sphere_moment(m).to_complex().real();
                CHECK(std::abs(est.estimate - exact) <= 3.0 * est.std_error + 1e-12);
            }
}

TEST_CASE("moments commute with the line integral") {
    Rng rng(0xc0ffee);
    for (int it = 0; it < 60; ++it) {
        // random decaying function with xi'-monomial coefficients
        XiRational base = random_decaying_xi_rational(rng);
        FormalPoly mono = FormalPoly::one();
        for (int t = 1; t <= 3; ++t)
            for (int e = rng.uniform_int(0, 2); e > 0; --e) mono = mono * P(ParamId::xi(t));
        XiRational f = base.scaled(mono);
        if (f.is_zero()) continue;
        FormalPoly path_a = apply_sphere_moments(integrate_line(f));
        // moments first, then the line integral
        std::vector<FormalPoly> num;
        for (auto& c : f.num()) num.push_back(apply_sphere_moments(c));
        XiRational momentized = XiRational::with_poles(num, f.pole_plus(), f.pole_minus());
        FormalPoly path_b = momentized.is_zero() ? FormalPoly::zero()
                                                 : integrate_line(momentized);
        CHECK(path_a == path_b);
    }
}

TEST_CASE("density term anchors") {
    // the only (r=-1, l=-2) term of the first functional: -8 S6 pi^2
    FormalPoly phiA = density_term_value(case_density_term(CaseId::PhiA));
    FormalPoly want = invariant_basis_poly(6).scaled(PiScalar(GaussianRational(-8), 2));
    CHECK(phiA == want);

    // the (r=-2, l=-1) mirror: +8 S6 pi^2
    FormalPoly psiA = density_term_value(case_density_term(CaseId::PsiA));
    CHECK(psiA == invariant_basis_poly(6).scaled(PiScalar(GaussianRational(8), 2)));

    // |alpha| = 1 cases vanish through the tangential rule
    CHECK(density_term_value(case_density_term(CaseId::PhiB1)).is_zero());
    CHECK(density_term_value(case_density_term(CaseId::PsiB1)).is_zero());
}

TEST_CASE("selection rule is enforced") {
    DensityTerm t = case_density_term(CaseId::PhiA);
    t.k = 1;  // breaks r+l-k-j-|alpha| = -3
    CHECK_THROWS_AS(check_selection_rule(t), Error);
    CHECK_THROWS_AS(density_integrand(t), Error);
}

TEST_CASE("case outputs are bilinear in the v- and w-type parameters") {
    for (CaseId id : kAllCases) {
        FormalPoly value = density_term_value(case_density_term(id));
        for (auto& [m, c] : value.terms()) {
            int v_deg = m.degree_of_kind(ParamKind::V) + m.degree_of_kind(ParamKind::Dv) +
                        m.degree_of_kind(ParamKind::H) + m.degree_of_kind(ParamKind::G);
            int w_deg = m.degree_of_kind(ParamKind::W) + m.degree_of_kind(ParamKind::Dw);
            CHECK(v_deg == 1);
            CHECK(w_deg == 1);
        }
    }
}

TEST_CASE("kernel split recombines to the full evaluation") {
    for (CaseId id : {CaseId::PhiA, CaseId::PhiB3, CaseId::PsiB4_B2}) {
        DensityTerm t = case_density_term(id);
        XiRational integrand = density_integrand(t);
        FormalPoly direct = apply_sphere_moments(integrand.integrate_line());
        FormalPoly via_kernels;
        for (auto& kt : split_kernels(integrand)) {
            FormalPoly contribution =
                integrate_line(kt.kernel).times_monomial(kt.mono);
            via_kernels = via_kernels + apply_sphere_moments(contribution);
        }
        CHECK(direct == via_kernels);
    }
}
