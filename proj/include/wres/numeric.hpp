#pragma once

#include <cstdint>
#include <functional>

#include "wres/residue.hpp"

namespace wres {

/// Deterministic splitmix64 stream; identical across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next();
    double uniform();                   // [0, 1)
    int uniform_int(int lo, int hi);    // inclusive
    Rational rational(int max_num = 20, int max_den = 9);  // nonzero denominators
    GaussianRational gaussian(int max_num = 20, int max_den = 9);
};

/// Random assignment of all geometric parameters to rationals in about [-2, 2].
ParamAssignment random_assignment(Rng& rng);

/// Adaptive Simpson quadrature of f over [-R, R] (tan substitution), plus the
/// analytic tail beyond R from the integrand's asymptotic expansion.
std::complex<double> quad_line(const XiRational& f, const ParamAssignment& a, double R,
                               double tol);

struct QuadCheck {
    std::complex<double> symbolic;
    std::complex<double> numeric;
    double rel_err;
};
/// Compares integrate_line against quadrature for the instantiated integrand.
QuadCheck check_line_integral(const XiRational& f, const ParamAssignment& a, double R = 1e6,
                              double tol = 1e-12);

struct MomentEstimate {
    double estimate;
    double std_error;
};
/// Monte-Carlo estimate of a sphere moment with `samples` uniform points.
MomentEstimate sphere_moment_mc(const MomentIndex& m, int samples, uint64_t seed);

/// Random decaying XiRational with constant Gaussian-rational coefficients
/// (pole orders <= max_order, numerator degree obeying the decay condition).
XiRational random_decaying_xi_rational(Rng& rng, int max_order = 4);
/// Random XiRational (not necessarily decaying) for algebra property tests.
XiRational random_xi_rational(Rng& rng, int max_order = 5, int max_extra_deg = 2);

}  // namespace wres
