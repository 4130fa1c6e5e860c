#include <doctest.h>

#include "wres/numeric.hpp"
#include "wres/symbols.hpp"

using namespace wres;

namespace {

FormalPoly P(ParamId p) { return FormalPoly::parameter(p); }

XiRational c16(long n, long d = 1) {
    return XiRational::from_formal(FormalPoly::constant(GaussianRational(Rational(n, d))));
}

CliffordMatrix random_matrix(Rng& rng) {
    const auto& g = build_generators();
    CliffordMatrix out;
    for (int t = rng.uniform_int(1, 3); t >= 0; --t) {
        CliffordMatrix word = CliffordMatrix::identity();
        for (int l = rng.uniform_int(1, 3); l >= 0; --l) {
            int idx = rng.uniform_int(0, 7);
            word = word * (idx < 4 ? g.c[idx] : g.chat[idx - 4]);
        }
        XiRational s = XiRational::from_formal(FormalPoly::constant(rng.gaussian(4, 3)));
        if (rng.uniform() < 0.4) s = s * XiRational::xin();
        out = out + word.scaled(s);
    }
    return out;
}

}  // namespace

TEST_CASE("generator assembly on the subset basis") {
    const auto& g = build_generators();
    // c_1 on the vacuum gives +e_1
    CHECK(g.c[0].at(1, 0) == XiRational::one());
    CHECK(g.c[0].at(0, 0).is_zero());
    // c_1 c_1 = -Id
    CHECK(g.c[0] * g.c[0] == CliffordMatrix::identity().scaled(GaussianRational(-1)));
    // chat_2 c_3 + c_3 chat_2 = 0
    CHECK((g.chat[1] * g.c[2] + g.c[2] * g.chat[1]).is_zero());
}

TEST_CASE("all 64 anticommutation relations hold exactly") {
    const auto& g = build_generators();
    const CliffordMatrix& id = CliffordMatrix::identity();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CliffordMatrix delta2 =
                (i == j) ? id.scaled(GaussianRational(2)) : CliffordMatrix::zero();
            CHECK(g.c[i] * g.c[j] + g.c[j] * g.c[i] + delta2 == CliffordMatrix::zero());
            CHECK(g.chat[i] * g.chat[j] + g.chat[j] * g.chat[i] == delta2);
            CHECK((g.c[i] * g.chat[j] + g.chat[j] * g.c[i]).is_zero());
        }
}

TEST_CASE("trace anchors") {
    CHECK(trace(CliffordMatrix::identity()) == c16(16));
    CHECK(trace(gen_c(1) * gen_c(2)).is_zero());
    CHECK(trace(gen_c(1) * gen_c(1)) == c16(-16));
}

TEST_CASE("trace of every reduced word in distinct generators vanishes") {
    const auto& g = build_generators();
    auto gen = [&](int idx) -> const CliffordMatrix& {
        return idx < 4 ? g.c[idx] : g.chat[idx - 4];
    };
    int checked = 0;
    for (int mask = 1; mask < 256; ++mask) {
        if (__builtin_popcount(mask) > 4) continue;
        CliffordMatrix word = CliffordMatrix::identity();
        for (int idx = 0; idx < 8; ++idx)
            if (mask & (1 << idx)) word = word * gen(idx);
        CHECK(trace(word).is_zero());
        ++checked;
    }
    CHECK(checked == 8 + 28 + 56 + 70);
}

TEST_CASE("trace cyclicity on 200 random pairs") {
    Rng rng(86753);
    for (int it = 0; it < 200; ++it) {
        CliffordMatrix a = random_matrix(rng), b = random_matrix(rng);
        CHECK(trace(a * b) == trace(b * a));
    }
}

TEST_CASE("clifford_of_covector") {
    CHECK(clifford_of_covector({FormalPoly::zero(), FormalPoly::zero(), FormalPoly::zero(),
                                FormalPoly::one()}) == gen_c(4));
    CliffordMatrix c_xi_prime =
        clifford_of_covector({P(ParamId::xi(1)), P(ParamId::xi(2)), P(ParamId::xi(3)),
                              FormalPoly::zero()});
    CHECK(c_xi_prime == c_xi_prime_jet().value);
    // c(xi')^2 = -Id once the sphere constraint is substituted
    CHECK(c_xi_prime * c_xi_prime == CliffordMatrix::identity().scaled(GaussianRational(-1)));
}

TEST_CASE("trace identity of the K0 prefactor (divergence form)") {
    CliffordMatrix k0 = clifford_prefactor(PrefactorKind::K0);
    XiRational tr = trace(k0 * gen_c(4));
    FormalPoly expect = invariant_basis_poly(6).scaled(GaussianRational(16));
    CHECK(tr == XiRational::from_formal(expect));

    // H = identity pattern collapses K0 to -4 c(w)
    CliffordMatrix cw = c_w_jet().value;
    CliffordMatrix sum;
    for (int j = 1; j <= 4; ++j) sum = sum + cw * gen_c(j) * gen_c(j);
    CHECK(sum == cw.scaled(GaussianRational(-4)));

    CHECK(clifford_prefactor(PrefactorKind::MinusTwoCw) == cw.scaled(GaussianRational(-2)));
}

TEST_CASE("trace identity for A(v) against c(dx_n)") {
    XiRational tr = trace(c_w_jet().value * a_of_v() * gen_c(4));
    FormalPoly expect = invariant_basis_poly(5).scaled(GaussianRational(-8));
    CHECK(tr == XiRational::from_formal(expect));
    // every entry carries a G factor, so A(v) vanishes when G = 0
    CliffordMatrix av = a_of_v();
    for (int r = 0; r < CliffordMatrix::kDim; ++r)
        for (int c = 0; c < CliffordMatrix::kDim; ++c)
            for (auto& coeff : av.at(r, c).num())
                for (auto& [m, s] : coeff.terms()) CHECK(m.degree_of_kind(ParamKind::G) == 1);
}

TEST_CASE("vanishing chat-sandwich traces") {
    CliffordMatrix cw = c_w_jet().value;
    CliffordMatrix m;
    for (int k = 1; k <= 3; ++k)
        m = m + (gen_chat(k) * gen_chat(4)).scaled(P(ParamId::xi(k)));
    CHECK(trace(cw * m * gen_c(4)).is_zero());
    CHECK(trace(cw * m * c_xi_prime_jet().value).is_zero());
}

TEST_CASE("basic w-traces") {
    CliffordMatrix cw = c_w_jet().value;
    CHECK(trace(cw * gen_c(4)) ==
          XiRational::from_formal(P(ParamId::w(4)).scaled(GaussianRational(-16))));
    FormalPoly xw;
    for (int t = 1; t <= 3; ++t) xw = xw + P(ParamId::xi(t)) * P(ParamId::w(t));
    CHECK(trace(cw * c_xi_prime_jet().value) ==
          XiRational::from_formal(xw.scaled(GaussianRational(-16))));
}

TEST_CASE("normal-derivative trace identity for v_j c(w) c(xi')") {
    // sum_j xi_j tr[d/dxn (v_j c(w) c(xi'))]
    //   = -16 [ sum_{jk} xi_j xi_k d(v_j w_k) + (1/2) h sum_{jk} xi_j xi_k v_j w_k ]
    XiRational total;
    for (int j = 1; j <= 3; ++j) {
        Jet<CliffordMatrix> vj(CliffordMatrix::scalar(XiRational::from_formal(P(ParamId::v(j)))),
                               CliffordMatrix::scalar(XiRational::from_formal(P(ParamId::dv(j)))));
        Jet<CliffordMatrix> prod = vj * c_w_jet() * c_xi_prime_jet();
        total = total + trace(prod.dxn_or_throw()).scaled(P(ParamId::xi(j)));
    }
    FormalPoly expect;
    for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
            FormalPoly xx = P(ParamId::xi(j)) * P(ParamId::xi(k));
            expect = expect + xx * (P(ParamId::dv(j)) * P(ParamId::w(k)) +
                                    P(ParamId::v(j)) * P(ParamId::dw(k)));
            expect = expect + xx * P(ParamId::v(j)) * P(ParamId::w(k)) *
                                  P(ParamId::hprime()).scaled(GaussianRational(Rational(1, 2)));
        }
    CHECK(total == XiRational::from_formal(expect.scaled(GaussianRational(-16))));
}

TEST_CASE("connection constants are jointly consistent") {
    const ConnectionConstants& cc = connection_constants();
    FormalPoly h = hprime_poly();
    CHECK(cc.q02 == gen_c(4).scaled(h.scaled(GaussianRational(Rational(-3, 4)))));
    for (int k = 1; k <= 3; ++k) {
        // sigma_k rebuilt from omega: -(1/4) sum_{s,t} omega_{s,t}(e_k) c_s c_t
        CliffordMatrix rebuilt;
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                FormalPoly om = cc.omega(k, s, t);
                if (!om.is_zero())
                    rebuilt = rebuilt + (gen_c(s) * gen_c(t))
                                            .scaled(om.scaled(GaussianRational(Rational(-1, 4))));
            }
        CHECK(rebuilt == cc.sigma_k[k - 1]);
        CHECK(cc.sigma_k[k - 1] ==
              (gen_c(k) * gen_c(4)).scaled(h.scaled(GaussianRational(Rational(1, 4)))));
        CHECK(cc.a_k[k - 1] ==
              (gen_chat(k) * gen_chat(4)).scaled(h.scaled(GaussianRational(Rational(-1, 4)))));
    }
    // Q_0^1 in closed form: -(1/4) h sum_k c_k chat_k chat_4
    CliffordMatrix q01;
    for (int k = 1; k <= 3; ++k)
        q01 = q01 + (gen_c(k) * gen_chat(k) * gen_chat(4))
                        .scaled(h.scaled(GaussianRational(Rational(-1, 4))));
    CHECK(cc.q01 == q01);
    CHECK(cc.sigma0_D == cc.q01 + cc.q02);
}

TEST_CASE("christoffel cross-check of the omega values") {
    // Independent derivation from the collar metric 1/h(x_n) g' + dx_n^2 at x0:
    // d/dxn g_ij = -h delta_ij (i,j < 4), frame factor sqrt(h)' = h/2.
    // Lowered Christoffels: Gamma_{ij,4} = (h/2) delta_ij, Gamma_{i4,k} = -(h/2) delta_ik.
    // omega_{s,t}(e_i) = <nabla_{e_i} e_t, e_s>.
    const ConnectionConstants& cc = connection_constants();
    FormalPoly h = hprime_poly();
    FormalPoly half = h.scaled(GaussianRational(Rational(1, 2)));
    for (int i = 1; i <= 4; ++i)
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                FormalPoly expect;  // zero unless a collar Christoffel survives
                if (i <= 3 && t <= 3 && s == 4 && i == t) expect = half;           // <nabla_i e_i, e_4>
                if (i <= 3 && t == 4 && s <= 3 && i == s) expect = -half;          // <nabla_i e_4, e_i>
                CHECK(cc.omega(i, s, t) == expect);
            }
}
