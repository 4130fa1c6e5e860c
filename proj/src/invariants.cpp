#include "wres/invariants.hpp"

namespace wres {

bool InvariantCombo::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

std::string InvariantCombo::basis_key(int idx, Basis b) {
    std::string base = "S" + std::to_string(idx);
    if (idx == 2 || idx == 4) base += (b == Basis::Hprime ? "h" : "K");
    return base;
}

std::string InvariantCombo::str() const {
    if (is_zero()) return "0";
    std::string grade = basis == Basis::Hprime ? "h*" : "K*";
    std::string s;
    for (int idx = 1; idx <= 6; ++idx) {
        const Rational& x = c[idx - 1];
        if (x == 0) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(x) + ")*";
        if (idx == 2 || idx == 4) s += grade;
        s += "S" + std::to_string(idx);
    }
    if (pi_power == 1) s += "  (*pi)";
    if (pi_power >= 2) s += "  (*pi^" + std::to_string(pi_power) + ")";
    return s;
}

InvariantCombo operator+(const InvariantCombo& a, const InvariantCombo& b) {
    if (a.basis != b.basis) throw Error("InvariantCombo: mixed bases in addition");
    if (a.pi_power != b.pi_power && !a.is_zero() && !b.is_zero())
        throw Error("InvariantCombo: mixed pi powers in addition");
    InvariantCombo out = a;
    for (int k = 0; k < 6; ++k) out.c[k] += b.c[k];
    return out;
}

InvariantCombo operator-(const InvariantCombo& a, const InvariantCombo& b) {
    InvariantCombo neg = b;
    for (auto& x : neg.c) x = -x;
    return a + neg;
}

FormalPoly invariant_basis_poly(int idx) {
    auto P = [](ParamId p) { return FormalPoly::parameter(p); };
    FormalPoly out;
    switch (idx) {
        case 1:
            for (int j = 1; j <= 3; ++j)
                out = out + P(ParamId::dv(j)) * P(ParamId::w(j)) +
                      P(ParamId::v(j)) * P(ParamId::dw(j));
            return out;
        case 2:
            for (int j = 1; j <= 3; ++j) out = out + P(ParamId::v(j)) * P(ParamId::w(j));
            return out * P(ParamId::hprime());
        case 3:
            return P(ParamId::dv(4)) * P(ParamId::w(4)) + P(ParamId::v(4)) * P(ParamId::dw(4));
        case 4:
            return P(ParamId::v(4)) * P(ParamId::w(4)) * P(ParamId::hprime());
        case 5:
            for (int j = 1; j <= 3; ++j) out = out + FormalPoly::g_param(4, j) * P(ParamId::w(j));
            return out;
        case 6: {
            for (int j = 1; j <= 4; ++j) out = out + P(ParamId::h(j, j)) * P(ParamId::w(4));
            for (int k = 1; k <= 4; ++k) out = out - P(ParamId::w(k)) * P(ParamId::h(4, k));
            for (int j = 1; j <= 4; ++j) out = out + P(ParamId::w(j)) * P(ParamId::h(j, 4));
            return out;
        }
    }
    throw Error("invariant_basis_poly: index out of range");
}

namespace {

Rational real_coefficient(const FormalPoly& p, const Monomial& m, int expected_pi) {
    PiScalar c = p.coefficient(m);
    if (c.is_zero()) return Rational(0);
    if (c.pi_power != expected_pi)
        throw Error("project_to_invariants: unexpected pi grading on " + m.str());
    if (!c.coeff.is_real())
        throw Error("project_to_invariants: non-real coefficient on " + m.str());
    return c.coeff.re;
}

}  // namespace

InvariantCombo project_to_invariants(const FormalPoly& p) {
    InvariantCombo out;
    out.basis = Basis::Hprime;
    out.pi_power = p.is_zero() ? 2 : p.pi_power();
    // distinguished monomial of each basis element
    const Monomial m1 = Monomial::of(ParamId::dv(1)).times(Monomial::of(ParamId::w(1)));
    const Monomial m2 = Monomial::of(ParamId::hprime())
                            .times(Monomial::of(ParamId::v(1)))
                            .times(Monomial::of(ParamId::w(1)));
    const Monomial m3 = Monomial::of(ParamId::dv(4)).times(Monomial::of(ParamId::w(4)));
    const Monomial m4 = Monomial::of(ParamId::hprime())
                            .times(Monomial::of(ParamId::v(4)))
                            .times(Monomial::of(ParamId::w(4)));
    const Monomial m5 = Monomial::of(ParamId::g(1, 4)).times(Monomial::of(ParamId::w(1)));
    const Monomial m6 = Monomial::of(ParamId::h(1, 1)).times(Monomial::of(ParamId::w(4)));

    int pp = out.pi_power;
    out.c[0] = real_coefficient(p, m1, pp);
    out.c[1] = real_coefficient(p, m2, pp);
    out.c[2] = real_coefficient(p, m3, pp);
    out.c[3] = real_coefficient(p, m4, pp);
    out.c[4] = -real_coefficient(p, m5, pp);  // S5 stores G_4j = -G_j4
    out.c[5] = real_coefficient(p, m6, pp);

    FormalPoly residual = p;
    for (int idx = 1; idx <= 6; ++idx) {
        if (out.c[idx - 1] == 0) continue;
        residual = residual -
                   invariant_basis_poly(idx).scaled(PiScalar(GaussianRational(out.c[idx - 1]), pp));
    }
    if (!residual.is_zero()) {
        std::string monos;
        int shown = 0;
        for (auto& [m, c] : residual.terms()) {
            if (shown++ == 8) {
                monos += " ...";
                break;
            }
            monos += " " + m.str();
        }
        throw Error("project_to_invariants: unrecognized invariant residue:" + monos);
    }
    return out;
}

InvariantCombo substitute_K(const InvariantCombo& combo) {
    if (combo.basis == Basis::K) throw Error("substitute_K: combo already in K basis");
    InvariantCombo out = combo;
    out.basis = Basis::K;
    out.c[1] = combo.c[1] * Rational(-2, 3);
    out.c[3] = combo.c[3] * Rational(-2, 3);
    return out;
}

CompareResult compare(const InvariantCombo& computed, const InvariantCombo& expected) {
    if (computed.basis != expected.basis)
        throw Error("compare: combos in different bases");
    InvariantCombo diff = computed - expected;
    return {diff.is_zero(), diff};
}

}  // namespace wres
