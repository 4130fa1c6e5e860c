#include "wres/scalar.hpp"

#include <cmath>

namespace wres {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        if (den == 0) throw Error("parse_rational: zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw Error("parse_rational: cannot parse '" + std::string(s) + "': " + e.what());
    }
}

double to_double(const Rational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

GaussianRational GaussianRational::inverse() const {
    Rational n = norm_sq();
    if (n == 0) throw Error("GaussianRational: division by zero");
    return {re / n, -im / n};
}

std::string GaussianRational::str() const {
    if (im == 0) return to_string(re);
    std::string imag = (im == 1) ? "i" : (im == -1 ? "-i" : to_string(im) + "*i");
    if (re == 0) return imag;
    return to_string(re) + (im > 0 ? "+" : "") + imag;
}

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, GqOp op) {
    switch (op) {
        case GqOp::Add: return a + b;
        case GqOp::Sub: return a - b;
        case GqOp::Mul: return a * b;
        case GqOp::Div: return a / b;
    }
    throw Error("gq_arith: bad op");
}

std::complex<double> PiScalar::to_complex() const {
    return coeff.to_complex() * std::pow(M_PI, pi_power);
}

std::string PiScalar::str() const {
    std::string s = coeff.str();
    if (pi_power == 1) s += "*pi";
    else if (pi_power != 0) s += "*pi^" + std::to_string(pi_power);
    return s;
}

PiScalar pi_scale(const PiScalar& s, const PiScalar& t) { return s * t; }

}  // namespace wres
