#include <doctest.h>

#include "wres/numeric.hpp"
#include "wres/residue.hpp"

using namespace wres;

namespace {

FormalPoly P(ParamId p) { return FormalPoly::parameter(p); }

XiRational over_plus(long num, long den, int order) {
    // num/den / (xi_n - i)^order
    return XiRational::with_poles({FormalPoly::constant(GaussianRational(Rational(num, den)))},
                                  order, 0);
}

}  // namespace

TEST_CASE("dxn rules") {
    CHECK(dxn_norm_sq_rule() == P(ParamId::hprime()));
    CHECK(dxn_c_xi_prime_rule() ==
          c_xi_prime_jet().value.scaled(
              P(ParamId::hprime()).scaled(GaussianRational(Rational(1, 2)))));
    CHECK(dx_tangential_rule().is_zero());
}

TEST_CASE("sigma_{-1}(D^{-1}) and its pi^+ form") {
    GradedSymbol s = sigma_D_inv(-1);
    CHECK(s.order == -1);
    CHECK(s.metric);
    // value: i c(xi)/(1+xi_n^2)
    XiRational inv = XiRational::inv_norm_sq(1);
    CliffordMatrix expect = c_xi_jet().value.scaled(inv.scaled(GaussianRational::i()));
    CHECK(s.term.value == expect);
    // pi^+ = (c(xi') + i c(dx_n)) / (2(xi_n - i))
    CliffordMatrix pip = s.term.value.pi_plus();
    CliffordMatrix want = (c_xi_prime_jet().value +
                           gen_c(4).scaled(GaussianRational::i()))
                              .scaled(over_plus(1, 2, 1));
    CHECK(pip == want);
    // at the xi' = 0 slot the value has entry i xi_n/(1+xi_n^2) c_4: check the
    // c_4 component via the (0, 8) matrix entry of c_4-term structure instead
    // by subtracting the tangential part
    CliffordMatrix c4part = s.term.value - c_xi_prime_jet().value.scaled(inv.scaled(GaussianRational::i()));
    CHECK(c4part == gen_c(4).scaled(XiRational::xin() * inv.scaled(GaussianRational::i())));
}

TEST_CASE("d/dxi_n of sigma_{-1}(D^{-1})") {
    // -2 i xi_n/(1+xi_n^2)^2 c(xi') + i (1 - xi_n^2)/(1+xi_n^2)^2 c(dx_n)
    CliffordMatrix d = sigma_D_inv(-1).term.value.d_xi();
    XiRational k1 = XiRational::with_poles(
        {FormalPoly::zero(), FormalPoly::constant(GaussianRational(Rational(0), Rational(-2)))},
        2, 2);
    XiRational k2 = XiRational::with_poles(
        {FormalPoly::constant(GaussianRational::i()), FormalPoly::zero(),
         FormalPoly::constant(-GaussianRational::i())},
        2, 2);
    CHECK(d == c_xi_prime_jet().value.scaled(k1) + gen_c(4).scaled(k2));
}

TEST_CASE("sigma_{-2}(D^{-2}) jet and the mixed derivative pair") {
    GradedSymbol s = sigma_Dsq_inv(-2);
    CHECK(s.term.value == CliffordMatrix::scalar(XiRational::inv_norm_sq(1)));
    // d/dxn = -h/(1+xi_n^2)^2
    XiRational dn = XiRational::inv_norm_sq(2).scaled(-P(ParamId::hprime()));
    CHECK(s.term.dxn_or_throw() == CliffordMatrix::scalar(dn));
    // d/dxi_n d/dxn = 4 h xi_n/(1+xi_n^2)^3
    XiRational mixed = XiRational::with_poles(
        {FormalPoly::zero(), P(ParamId::hprime()).scaled(GaussianRational(4))}, 3, 3);
    CHECK(s.term.dxn_or_throw().d_xi() == CliffordMatrix::scalar(mixed));
}

TEST_CASE("sigma_{-3}(D^{-2}) scalar and clifford parts") {
    CliffordMatrix s = sigma_Dsq_inv(-3).term.value;
    FormalPoly h = P(ParamId::hprime());
    // scalar part -(5 i xi_n^3 + 9 i xi_n) h / (2 (1+xi_n^2)^3)
    GaussianRational i2 = GaussianRational(Rational(0), Rational(-9, 2));
    GaussianRational i4 = GaussianRational(Rational(0), Rational(-5, 2));
    XiRational scalar = XiRational::with_poles({FormalPoly::zero(), h.scaled(i2),
                                                FormalPoly::zero(), h.scaled(i4)},
                                               3, 3);
    // clifford part (i h / (2 (1+xi_n^2)^2)) sum_k xi_k (c_k c_4 + chat_k chat_4)
    CliffordMatrix cliff;
    for (int k = 1; k <= 3; ++k)
        cliff = cliff + (gen_c(k) * gen_c(4) + gen_chat(k) * gen_chat(4))
                            .scaled(P(ParamId::xi(k)) * h);
    XiRational pref = XiRational::inv_norm_sq(2).scaled(
        GaussianRational(Rational(0), Rational(1, 2)));
    CHECK(s == CliffordMatrix::scalar(scalar) + cliff.scaled(pref));
}

TEST_CASE("lemma 4.5 cross-check: compose equals the hand-coded expansion") {
    auto [nv1, nv0] = sigma_nabla_v();
    std::vector<GradedSymbol> left = {nv1, nv0};
    std::vector<GradedSymbol> right = {sigma_D_inv(-1), sigma_D_inv(-2)};

    // order 0: sigma_1(nabla_v) sigma_{-1}(D^{-1})
    GradedSymbol o0 = compose(left, right, 0);
    CHECK(o0.term.value == nv1.term.value * sigma_D_inv(-1).term.value);

    auto terms = compose_terms(left, right, -1);
    REQUIRE(terms.size() == 3);
    const ConnectionConstants& cc = connection_constants();
    (void)cc;
    for (auto& t : terms) {
        if (t.left_order == 1 && t.right_order == -2) {
            CHECK(t.value.value == nv1.term.value * sigma_D_inv(-2).term.value);
        } else if (t.left_order == 0 && t.right_order == -1) {
            CHECK(t.value.value == a_of_v() * sigma_D_inv(-1).term.value);
        } else {
            // derivative term: v_4 (i (1/2)h c(xi')/|xi|^2 - i c(xi) h/|xi|^4)
            REQUIRE(t.alpha_n == 1);
            FormalPoly h = P(ParamId::hprime());
            GaussianRational i = GaussianRational::i();
            CliffordMatrix hand =
                (dxn_c_xi_prime_rule().scaled(XiRational::inv_norm_sq(1).scaled(i)) -
                 c_xi_jet().value.scaled(XiRational::inv_norm_sq(2).scaled(i).scaled(h)))
                    .scaled(P(ParamId::v(4)));
            CHECK(t.value.value == hand);
        }
    }
}

TEST_CASE("lemma 5.1 cross-check including the -v_4 h/|xi|^4 term") {
    auto [nv1, nv0] = sigma_nabla_v();
    std::vector<GradedSymbol> left = {nv1, nv0};
    std::vector<GradedSymbol> right = {sigma_Dsq_inv(-2), sigma_Dsq_inv(-3)};

    GradedSymbol om1 = compose(left, right, -1);
    CHECK(om1.term.value == nv1.term.value * sigma_Dsq_inv(-2).term.value);
    // its jet is available and obeys the product rule against the factors
    CHECK(om1.term.dxn_or_throw() ==
          nv1.term.dxn_or_throw() * sigma_Dsq_inv(-2).term.value +
              nv1.term.value * sigma_Dsq_inv(-2).term.dxn_or_throw());

    auto terms = compose_terms(left, right, -2);
    REQUIRE(terms.size() == 3);
    for (auto& t : terms) {
        if (t.left_order == 0) {
            CHECK(t.value.value == a_of_v() * sigma_Dsq_inv(-2).term.value);
        } else if (t.right_order == -3) {
            CHECK(t.value.value == nv1.term.value * sigma_Dsq_inv(-3).term.value);
        } else {
            REQUIRE(t.alpha_n == 1);
            XiRational hand = XiRational::inv_norm_sq(2)
                                  .scaled(-P(ParamId::hprime()))
                                  .scaled(P(ParamId::v(4)));
            CHECK(t.value.value == CliffordMatrix::scalar(hand));
        }
    }
}

TEST_CASE("inverse symbol recursion") {
    GradedSymbol p1{1, p1_jet(), true};
    GradedSymbol p0{0, Jet<CliffordMatrix>(connection_constants().sigma0_D), true};
    GradedSymbol q1 = sigma_D_inv(-1);
    GradedSymbol q2 = sigma_D_inv(-2);

    // p1 q_{-1} = Id at order 0
    GradedSymbol order0 = compose({p1, p0}, {q1, q2}, 0);
    CHECK(order0.term.value == CliffordMatrix::identity());

    // order -1 of sigma(D o D^{-1}) vanishes with the recursion's q_{-2}
    GradedSymbol orderm1 = compose({p1, p0}, {q1, q2}, -1);
    CHECK(orderm1.term.value.is_zero());
}

TEST_CASE("leading-symbol sanity for the operator decomposition") {
    // sigma_1(c(w)(D c(v) + c(v) D)) = c(w)(i c(xi) c(v) + c(v) i c(xi))
    //                                = -2 i (sum v_j xi_j) c(w) = -2 c(w) sigma_1(nabla_v)
    CliffordMatrix cv;
    for (int j = 1; j <= 4; ++j) cv = cv + gen_c(j).scaled(P(ParamId::v(j)));
    CliffordMatrix cw = c_w_jet().value;
    CliffordMatrix p1 = p1_jet().value;
    CliffordMatrix lhs = cw * (p1 * cv + cv * p1);
    CliffordMatrix rhs = minus_two_c_w().value * sigma_nabla_v().first.term.value;
    CHECK(lhs == rhs);
}

TEST_CASE("compose reports insufficient expansion depth") {
    GradedSymbol p1{1, p1_jet(), true};
    std::vector<GradedSymbol> just_p1 = {p1};
    std::vector<GradedSymbol> just_q1 = {sigma_D_inv(-1)};
    // target -1 from p1 and q_{-1} alone needs the missing |alpha| >= 2 data
    CHECK_THROWS_AS(compose(just_p1, just_q1, -1), Error);
    // and a target no pair can reach at all
    CHECK_THROWS_AS(compose(just_p1, just_q1, -5), Error);
}

TEST_CASE("sigma_nabla_v anchors") {
    auto [nv1, nv0] = sigma_nabla_v();
    CHECK(nv1.order == 1);
    CHECK(nv0.order == 0);
    CHECK(nv0.term.value == a_of_v());
    CHECK_FALSE(nv0.term.has_dxn());
    // v = (1,0,0,0) slot: the coefficient of v_1 in sigma_1 is i xi_1
    // check by extracting the v_1-degree part of the diagonal entry
    XiRational diag = nv1.term.value.at(0, 0);
    bool found = false;
    for (auto& coeff : diag.num())
        for (auto& [m, c] : coeff.terms())
            if (m.exponent(ParamId::v(1)) == 1) {
                CHECK(m.exponent(ParamId::xi(1)) == 1);
                CHECK(c == PiScalar(GaussianRational::i()));
                found = true;
            }
    CHECK(found);
    // jet carries Dv
    CHECK(nv1.term.dxn_or_throw().at(0, 0).num().size() == 2);
}

TEST_CASE("minus_two_c_w jet") {
    Jet<CliffordMatrix> m = minus_two_c_w();
    CliffordMatrix dxn_expect;
    for (int l = 1; l <= 4; ++l)
        dxn_expect = dxn_expect + gen_c(l).scaled(P(ParamId::dw(l)).scaled(GaussianRational(-2)));
    CHECK(m.dxn_or_throw() == dxn_expect);
}

TEST_CASE("sigma_{-2}(D^{-1}) split") {
    const DinvOrder2Split& split = sigma_D_inv_m2_split();
    CHECK(split.full.term.value == split.q01_part.term.value + split.metric_part.term.value);
    CHECK_FALSE(split.full.term.has_dxn());
    CHECK(split.full.metric);
}
