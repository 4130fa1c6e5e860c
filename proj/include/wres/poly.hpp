#pragma once

#include <functional>
#include <map>
#include <string>

#include "wres/param.hpp"
#include "wres/scalar.hpp"

namespace wres {

/// Assignment of exact values to parameters, keyed by ParamId code.
using ParamAssignment = std::map<uint16_t, GaussianRational>;

/// Sparse multivariate polynomial over PiScalar coefficients.  Canonical form:
/// no zero coefficients, G antisymmetry resolved at construction (only i < j
/// parameters exist), and the sphere constraint reduced via
/// xi3^2 -> 1 - xi1^2 - xi2^2.
class FormalPoly {
  public:
    FormalPoly() = default;

    static FormalPoly zero() { return {}; }
    static FormalPoly one() { return constant(PiScalar(1)); }
    static FormalPoly constant(PiScalar c);
    static FormalPoly constant(GaussianRational c) { return constant(PiScalar(std::move(c))); }
    static FormalPoly parameter(ParamId p);
    /// G_ij for any i, j: antisymmetry applied (G_ji = -G_ij, G_ii = 0).
    static FormalPoly g_param(int i, int j);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, PiScalar>& terms() const { return terms_; }
    PiScalar coefficient(const Monomial& m) const;
    /// Uniform pi power of all terms (0 for the zero polynomial); throws if mixed.
    int pi_power() const;

    FormalPoly scaled(const PiScalar& s) const;
    FormalPoly scaled(const GaussianRational& s) const { return scaled(PiScalar(s)); }
    FormalPoly times_monomial(const Monomial& m) const;
    /// Multiplies every coefficient by pi^k.
    FormalPoly raised_pi(int k) const;

    GaussianRational eval(const ParamAssignment& a) const;  // requires pi_power 0
    std::complex<double> eval_complex(const ParamAssignment& a) const;

    std::string str() const;

    friend FormalPoly operator+(const FormalPoly& a, const FormalPoly& b);
    friend FormalPoly operator-(const FormalPoly& a);
    friend FormalPoly operator-(const FormalPoly& a, const FormalPoly& b) { return a + (-b); }
    friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b);
    friend bool operator==(const FormalPoly& a, const FormalPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void add_term(const Monomial& m, const PiScalar& c);
    void reduce_sphere();
    std::map<Monomial, PiScalar> terms_;
};

enum class PolyOp { Add, Mul };
FormalPoly poly_arith(const FormalPoly& p, const FormalPoly& q, PolyOp op);

}  // namespace wres
