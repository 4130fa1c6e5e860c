#include "wres/symbols.hpp"

namespace wres {

namespace {

const GaussianRational kI = GaussianRational::i();

FormalPoly half_h() {
    return hprime_poly().scaled(GaussianRational(Rational(1, 2)));
}

}  // namespace

FormalPoly hprime_poly() { return FormalPoly::parameter(ParamId::hprime()); }

Jet<CliffordMatrix> c_xi_prime_jet() {
    CliffordMatrix v;
    for (int t = 1; t <= 3; ++t)
        v = v + gen_c(t).scaled(FormalPoly::parameter(ParamId::xi(t)));
    return {v, v.scaled(half_h())};
}

Jet<CliffordMatrix> c_dxn_jet() { return Jet<CliffordMatrix>::constant(gen_c(4)); }

Jet<CliffordMatrix> c_xi_jet() {
    Jet<CliffordMatrix> cp = c_xi_prime_jet();
    CliffordMatrix xin_c4 = gen_c(4).scaled(XiRational::xin());
    return {cp.value + xin_c4, *cp.dxn};
}

Jet<XiRational> inv_norm_jet(int k) {
    XiRational v = XiRational::inv_norm_sq(k);
    XiRational d = XiRational::inv_norm_sq(k + 1)
                       .scaled(hprime_poly().scaled(GaussianRational(Rational(-k))));
    return {v, d};
}

Jet<CliffordMatrix> c_w_jet() {
    CliffordMatrix v, d;
    for (int l = 1; l <= 4; ++l) {
        v = v + gen_c(l).scaled(FormalPoly::parameter(ParamId::w(l)));
        d = d + gen_c(l).scaled(FormalPoly::parameter(ParamId::dw(l)));
    }
    return {v, d};
}

FormalPoly dxn_norm_sq_rule() { return hprime_poly(); }
CliffordMatrix dxn_c_xi_prime_rule() { return c_xi_prime_jet().value.scaled(half_h()); }
FormalPoly dx_tangential_rule() { return FormalPoly::zero(); }

FormalPoly ConnectionConstants::omega(int i, int s, int t) const {
    if (i <= 3 && s == i && t == 4) return hprime_poly().scaled(GaussianRational(Rational(-1, 2)));
    if (i <= 3 && s == 4 && t == i) return hprime_poly().scaled(GaussianRational(Rational(1, 2)));
    return FormalPoly::zero();
}

const ConnectionConstants& connection_constants() {
    static const ConnectionConstants cc = [] {
        ConnectionConstants out;
        out.gamma_n = hprime_poly().scaled(GaussianRational(Rational(5, 2)));
        for (int k = 1; k <= 3; ++k) {
            out.sigma_k[k - 1] =
                (gen_c(k) * gen_c(4)).scaled(hprime_poly().scaled(GaussianRational(Rational(1, 4))));
            out.a_k[k - 1] = (gen_chat(k) * gen_chat(4))
                                 .scaled(hprime_poly().scaled(GaussianRational(Rational(-1, 4))));
        }
        // Q_0^1, Q_0^2 assembled from the omega values themselves
        CliffordMatrix q01, q02;
        for (int i = 1; i <= 4; ++i)
            for (int s = 1; s <= 4; ++s)
                for (int t = 1; t <= 4; ++t) {
                    FormalPoly om = out.omega(i, s, t);
                    if (om.is_zero()) continue;
                    q01 = q01 + (gen_c(i) * gen_chat(s) * gen_chat(t))
                                    .scaled(om.scaled(GaussianRational(Rational(1, 4))));
                    q02 = q02 + (gen_c(i) * gen_c(s) * gen_c(t))
                                    .scaled(om.scaled(GaussianRational(Rational(-1, 4))));
                }
        out.q01 = q01;
        out.q02 = q02;
        out.sigma0_D = q01 + q02;
        return out;
    }();
    return cc;
}

Jet<CliffordMatrix> p1_jet() {
    Jet<CliffordMatrix> cxi = c_xi_jet();
    return {cxi.value.scaled(kI), cxi.dxn_or_throw().scaled(kI)};
}

GradedSymbol sigma_D_inv(int order) {
    if (order == -1) {
        // i c(xi)/|xi|^2
        Jet<CliffordMatrix> cxi = c_xi_jet();
        Jet<XiRational> inv = inv_norm_jet(1);
        Jet<CliffordMatrix> invm(CliffordMatrix::scalar(inv.value),
                                 CliffordMatrix::scalar(inv.dxn_or_throw()));
        Jet<CliffordMatrix> prod = cxi * invm;
        return {-1, {prod.value.scaled(kI), prod.dxn_or_throw().scaled(kI)}, true};
    }
    if (order == -2) return sigma_D_inv_m2_split().full;
    throw Error("sigma_D_inv: order must be -1 or -2");
}

const DinvOrder2Split& sigma_D_inv_m2_split() {
    static const DinvOrder2Split split = [] {
        const ConnectionConstants& cc = connection_constants();
        CliffordMatrix cxi = c_xi_jet().value;
        CliffordMatrix c4 = gen_c(4);
        XiRational inv2 = XiRational::inv_norm_sq(2);
        XiRational inv3 = XiRational::inv_norm_sq(3);
        XiRational norm = XiRational::from_poly({FormalPoly::one(), FormalPoly::zero(),
                                                 FormalPoly::one()});  // 1 + xi_n^2

        CliffordMatrix q01_part = (cxi * cc.q01 * cxi).scaled(inv2);
        // c(xi) c(dx_n) [ (d/dxn c(xi')) |xi|^2 - c(xi) h ] / |xi|^6
        CliffordMatrix bracket = dxn_c_xi_prime_rule().scaled(norm) - cxi.scaled(hprime_poly());
        CliffordMatrix metric_part = (cxi * cc.q02 * cxi).scaled(inv2) + (cxi * c4 * bracket).scaled(inv3);

        DinvOrder2Split out;
        out.q01_part = {-2, Jet<CliffordMatrix>(q01_part), true};
        out.metric_part = {-2, Jet<CliffordMatrix>(metric_part), true};
        out.full = {-2, Jet<CliffordMatrix>(q01_part + metric_part), true};
        return out;
    }();
    return split;
}

GradedSymbol sigma_Dsq_inv(int order) {
    if (order == -2) {
        Jet<XiRational> inv = inv_norm_jet(1);
        return {-2,
                {CliffordMatrix::scalar(inv.value), CliffordMatrix::scalar(inv.dxn_or_throw())},
                true};
    }
    if (order == -3) {
        const ConnectionConstants& cc = connection_constants();
        XiRational inv2 = XiRational::inv_norm_sq(2);
        XiRational inv3 = XiRational::inv_norm_sq(3);
        // -i |xi|^-4 [ xi_n Gamma^n + sum_k xi_k (-2 sigma^k + 2 a^k) ] - 2i |xi|^-6 xi_n h
        CliffordMatrix bracket =
            CliffordMatrix::scalar(XiRational::xin().scaled(cc.gamma_n));
        for (int k = 1; k <= 3; ++k) {
            FormalPoly xik = FormalPoly::parameter(ParamId::xi(k));
            CliffordMatrix comb = cc.sigma_k[k - 1].scaled(GaussianRational(-2)) +
                                  cc.a_k[k - 1].scaled(GaussianRational(2));
            bracket = bracket + comb.scaled(xik);
        }
        CliffordMatrix value = bracket.scaled(inv2.scaled(-kI)) +
                               CliffordMatrix::scalar(
                                   inv3.scaled(hprime_poly().scaled(GaussianRational(-2) * kI)) *
                                   XiRational::xin());
        return {-3, Jet<CliffordMatrix>(value), true};
    }
    throw Error("sigma_Dsq_inv: order must be -2 or -3");
}

CliffordMatrix a_of_v() {
    CliffordMatrix out;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            FormalPoly g = FormalPoly::g_param(i, j).scaled(GaussianRational(Rational(1, 4)));
            out = out + (gen_c(i) * gen_c(j) - gen_chat(i) * gen_chat(j)).scaled(g);
        }
    return out;
}

std::pair<GradedSymbol, GradedSymbol> sigma_nabla_v() {
    FormalPoly tang, tang_d;
    for (int t = 1; t <= 3; ++t) {
        FormalPoly xit = FormalPoly::parameter(ParamId::xi(t));
        tang = tang + FormalPoly::parameter(ParamId::v(t)) * xit;
        tang_d = tang_d + FormalPoly::parameter(ParamId::dv(t)) * xit;
    }
    XiRational val = XiRational::from_formal(tang) +
                     XiRational::xin().scaled(FormalPoly::parameter(ParamId::v(4)));
    XiRational dxn = XiRational::from_formal(tang_d) +
                     XiRational::xin().scaled(FormalPoly::parameter(ParamId::dv(4)));
    GradedSymbol order1{1,
                        {CliffordMatrix::scalar(val.scaled(kI)),
                         CliffordMatrix::scalar(dxn.scaled(kI))},
                        false};
    GradedSymbol order0{0, Jet<CliffordMatrix>(a_of_v()), false};
    return {order1, order0};
}

CliffordMatrix k0_prefactor() {
    CliffordMatrix cw = c_w_jet().value;
    CliffordMatrix out;
    for (int j = 1; j <= 4; ++j) {
        CliffordMatrix grad;  // c(nabla_{e_j} v) = sum_k H_jk c_k
        for (int k = 1; k <= 4; ++k)
            grad = grad + gen_c(k).scaled(FormalPoly::parameter(ParamId::h(j, k)));
        out = out + cw * gen_c(j) * grad;
    }
    return out;
}

Jet<CliffordMatrix> minus_two_c_w() {
    Jet<CliffordMatrix> cw = c_w_jet();
    GaussianRational m2(-2);
    return {cw.value.scaled(m2), cw.dxn_or_throw().scaled(m2)};
}

CliffordMatrix clifford_prefactor(PrefactorKind kind) {
    return kind == PrefactorKind::K0 ? k0_prefactor() : minus_two_c_w().value;
}

std::vector<ComposeTerm> compose_terms(const std::vector<GradedSymbol>& left,
                                       const std::vector<GradedSymbol>& right,
                                       int target_order) {
    std::vector<ComposeTerm> out;
    for (const GradedSymbol& L : left)
        for (const GradedSymbol& R : right) {
            int s = L.order + R.order;
            if (s == target_order) {
                out.push_back({L.order, R.order, 0, L.term * R.term});
            } else if (s == target_order + 1) {
                // (1/alpha!) d_xi^alpha(L) D_x^alpha(R): tangential components
                // vanish only for metric right factors
                if (!R.metric)
                    throw Error("compose: tangential x'-derivative of a non-metric right factor");
                CliffordMatrix dL = L.term.value.d_xi();
                CliffordMatrix DxnR = R.term.dxn_or_throw().scaled(-kI);  // D_xn = -i d/dxn
                out.push_back({L.order, R.order, 1, Jet<CliffordMatrix>(dL * DxnR)});
            } else if (s >= target_order + 2) {
                throw Error("compose: target order " + std::to_string(target_order) +
                            " needs an |alpha| >= 2 term from orders (" +
                            std::to_string(L.order) + ", " + std::to_string(R.order) +
                            "); expansion depth insufficient");
            }
        }
    if (out.empty())
        throw Error("compose: no contributions at target order " + std::to_string(target_order) +
                    "; expansion depth insufficient");
    return out;
}

GradedSymbol compose(const std::vector<GradedSymbol>& left,
                     const std::vector<GradedSymbol>& right, int target_order) {
    auto terms = compose_terms(left, right, target_order);
    Jet<CliffordMatrix> total = terms.front().value;
    for (size_t k = 1; k < terms.size(); ++k) total = total + terms[k].value;
    bool metric = true;
    for (auto& L : left) metric = metric && L.metric;
    for (auto& R : right) metric = metric && R.metric;
    return {target_order, total, metric};
}

GradedSymbol premultiply(const Jet<CliffordMatrix>& factor, const GradedSymbol& s) {
    return {s.order, factor * s.term, false};
}

}  // namespace wres
