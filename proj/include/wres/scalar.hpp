#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wres {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;
// Always in lowest terms with positive denominator (library invariant).
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);  // "p", "p/q", optional sign
double to_double(const Rational& r);

/// Exact element of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational inverse() const;
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
    std::string str() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

enum class GqOp { Add, Sub, Mul, Div };
GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, GqOp op);

/// Exact coefficient times an integer power of pi.  Addition requires equal
/// power unless one side is zero; multiplication adds powers.
struct PiScalar {
    GaussianRational coeff;
    int pi_power = 0;

    PiScalar() = default;
    PiScalar(GaussianRational c, int p = 0) : coeff(std::move(c)), pi_power(p) {
        if (coeff.is_zero()) pi_power = 0;
    }
    PiScalar(long c) : coeff(c) {}

    bool is_zero() const { return coeff.is_zero(); }
    std::complex<double> to_complex() const;
    std::string str() const;

    friend PiScalar operator+(const PiScalar& a, const PiScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_power != b.pi_power)
            throw Error("PiScalar: addition of mixed pi powers (" + std::to_string(a.pi_power) +
                        " vs " + std::to_string(b.pi_power) + ")");
        return {a.coeff + b.coeff, a.pi_power};
    }
    friend PiScalar operator-(const PiScalar& a) { return {-a.coeff, a.pi_power}; }
    friend PiScalar operator-(const PiScalar& a, const PiScalar& b) { return a + (-b); }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        return {a.coeff * b.coeff, a.pi_power + b.pi_power};
    }
    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.coeff == b.coeff && (a.is_zero() || a.pi_power == b.pi_power);
    }
};

PiScalar pi_scale(const PiScalar& s, const PiScalar& t);

}  // namespace wres
