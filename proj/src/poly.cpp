#include "wres/poly.hpp"

namespace wres {

FormalPoly FormalPoly::constant(PiScalar c) {
    FormalPoly p;
    if (!c.is_zero()) p.terms_[Monomial::unit()] = std::move(c);
    return p;
}

FormalPoly FormalPoly::parameter(ParamId p) {
    FormalPoly out;
    out.terms_[Monomial::of(p)] = PiScalar(1);
    return out;
}

FormalPoly FormalPoly::g_param(int i, int j) {
    if (i == j) return zero();
    if (i < j) return parameter(ParamId::g(i, j));
    return -parameter(ParamId::g(j, i));
}

PiScalar FormalPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? PiScalar() : it->second;
}

int FormalPoly::pi_power() const {
    int p = 0;
    bool seen = false;
    for (auto& [m, c] : terms_) {
        if (!seen) {
            p = c.pi_power;
            seen = true;
        } else if (c.pi_power != p) {
            throw Error("FormalPoly: mixed pi powers");
        }
    }
    return p;
}

void FormalPoly::add_term(const Monomial& m, const PiScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

// xi3^2 -> 1 - xi1^2 - xi2^2, applied until no exponent of xi3 exceeds 1
void FormalPoly::reduce_sphere() {
    const ParamId x1 = ParamId::xi(1), x2 = ParamId::xi(2), x3 = ParamId::xi(3);
    for (;;) {
        auto it = terms_.begin();
        for (; it != terms_.end(); ++it)
            if (it->first.exponent(x3) >= 2) break;
        if (it == terms_.end()) return;
        Monomial m = it->first;
        PiScalar c = it->second;
        terms_.erase(it);
        Monomial base;
        for (auto& [code, e] : m.factors()) {
            ParamId p = ParamId::from_code(code);
            base = base.times(Monomial::of(p, p == x3 ? e - 2 : e));
        }
        add_term(base, c);
        add_term(base.times(Monomial::of(x1, 2)), -c);
        add_term(base.times(Monomial::of(x2, 2)), -c);
    }
}

FormalPoly FormalPoly::scaled(const PiScalar& s) const {
    FormalPoly out;
    if (s.is_zero()) return out;
    for (auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
}

FormalPoly FormalPoly::times_monomial(const Monomial& m) const {
    FormalPoly out;
    for (auto& [mm, c] : terms_) out.terms_[mm.times(m)] = c;
    out.reduce_sphere();
    return out;
}

FormalPoly FormalPoly::raised_pi(int k) const {
    FormalPoly out;
    for (auto& [m, c] : terms_) out.terms_[m] = PiScalar(c.coeff, c.pi_power + k);
    return out;
}

GaussianRational FormalPoly::eval(const ParamAssignment& a) const {
    GaussianRational total;
    for (auto& [m, c] : terms_) {
        if (c.pi_power != 0) throw Error("FormalPoly::eval: nonzero pi power; use eval_complex");
        GaussianRational term = c.coeff;
        for (auto& [code, e] : m.factors()) {
            auto it = a.find(code);
            if (it == a.end())
                throw Error("FormalPoly::eval: no value for " + ParamId::from_code(code).name());
            for (int k = 0; k < e; ++k) term = term * it->second;
        }
        total = total + term;
    }
    return total;
}

std::complex<double> FormalPoly::eval_complex(const ParamAssignment& a) const {
    std::complex<double> total;
    for (auto& [m, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (auto& [code, e] : m.factors()) {
            auto it = a.find(code);
            if (it == a.end())
                throw Error("FormalPoly::eval_complex: no value for " +
                            ParamId::from_code(code).name());
            for (int k = 0; k < e; ++k) term *= it->second.to_complex();
        }
        total += term;
    }
    return total;
}

std::string FormalPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (m.is_unit())
            s += c.str();
        else if (c == PiScalar(1))
            s += m.str();
        else
            s += "(" + c.str() + ")*" + m.str();
    }
    return s;
}

FormalPoly operator+(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out = a;
    for (auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

FormalPoly operator-(const FormalPoly& a) {
    FormalPoly out;
    for (auto& [m, c] : a.terms_) out.terms_[m] = -c;
    return out;
}

FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
    FormalPoly out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    out.reduce_sphere();
    return out;
}

FormalPoly poly_arith(const FormalPoly& p, const FormalPoly& q, PolyOp op) {
    return op == PolyOp::Add ? p + q : p * q;
}

}  // namespace wres
