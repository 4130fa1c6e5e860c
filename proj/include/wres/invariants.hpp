#pragma once

#include <array>
#include <string>

#include "wres/poly.hpp"

namespace wres {

enum class Basis { Hprime, K };

/// Exact coefficient vector over the canonical boundary invariants
///   S1 = sum_{j<4} (Dv_j w_j + v_j Dw_j)     S4 = v_4 w_4            (h/K graded)
///   S2 = sum_{j<4} v_j w_j   (h/K graded)    S5 = sum_{j<4} G_4j w_j
///   S3 = Dv_4 w_4 + v_4 Dw_4                 S6 = (sum_j H_jj) w_4 - sum_k w_k H_4k + sum_j w_j H_j4
/// S2 and S4 only ever appear multiplied by h (Hprime basis) or K (K basis).
struct InvariantCombo {
    std::array<Rational, 6> c{};
    Basis basis = Basis::Hprime;
    int pi_power = 2;

    bool is_zero() const;
    const Rational& s(int idx) const { return c[idx - 1]; }  // idx in 1..6
    Rational& s(int idx) { return c[idx - 1]; }

    std::string str() const;   // e.g. "-8/3*S1 + 6*h*S2 + ... (*pi^2)"
    static std::string basis_key(int idx, Basis b);  // "S1", "S2h"/"S2K", ...

    friend InvariantCombo operator+(const InvariantCombo& a, const InvariantCombo& b);
    friend InvariantCombo operator-(const InvariantCombo& a, const InvariantCombo& b);
    friend bool operator==(const InvariantCombo& a, const InvariantCombo& b) {
        return a.c == b.c && a.basis == b.basis && a.pi_power == b.pi_power;
    }
};

/// The basis element as a FormalPoly (pi power 0; S2/S4 include the h factor).
FormalPoly invariant_basis_poly(int idx);

/// Exact projection; any residual monomial outside the span is an error
/// carrying the offending monomials.
InvariantCombo project_to_invariants(const FormalPoly& p);

/// h -> -(2/3) K on the graded coefficients.
InvariantCombo substitute_K(const InvariantCombo& combo);

struct CompareResult {
    bool match;
    InvariantCombo diff;  // computed - expected
};
CompareResult compare(const InvariantCombo& computed, const InvariantCombo& expected);

}  // namespace wres
