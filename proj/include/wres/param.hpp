#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wres/scalar.hpp"

namespace wres {

enum class ParamKind : uint8_t { Hprime, G, H, Dv, V, Dw, W, Xi };

/// Formal geometric parameter at the boundary point: frame components of the
/// two vector fields and their normal derivatives (v_j, w_j, Dv_j, Dw_j),
/// h = h'(0), the covariant-derivative matrix H_jk, the antisymmetric
/// connection pairing G_ij (stored with i < j), and the tangential covector
/// components xi_1..xi_3.
class ParamId {
  public:
    static ParamId hprime() { return ParamId(0); }
    static ParamId g(int i, int j);   // requires 1 <= i < j <= 4
    static ParamId h(int j, int k) { return ParamId(uint16_t(16 + 4 * (j - 1) + (k - 1))); }
    static ParamId dv(int j) { return ParamId(uint16_t(32 + j - 1)); }
    static ParamId v(int j) { return ParamId(uint16_t(36 + j - 1)); }
    static ParamId dw(int j) { return ParamId(uint16_t(40 + j - 1)); }
    static ParamId w(int j) { return ParamId(uint16_t(44 + j - 1)); }
    static ParamId xi(int t) { return ParamId(uint16_t(48 + t - 1)); }
    static ParamId from_code(uint16_t c) { return ParamId(c); }

    ParamKind kind() const;
    int index1() const;  // j for v/w/Dv/Dw/xi; i for G; j for H
    int index2() const;  // j for G; k for H
    uint16_t code() const { return code_; }
    std::string name() const;

    auto operator<=>(const ParamId&) const = default;

  private:
    explicit ParamId(uint16_t c) : code_(c) {}
    uint16_t code_;
};

/// Exponent multi-index over ParamId, sorted by parameter code.
class Monomial {
  public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }
    static Monomial of(ParamId p, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    int exponent(ParamId p) const;
    int total_degree() const;
    const std::vector<std::pair<uint16_t, uint16_t>>& factors() const { return factors_; }

    Monomial times(const Monomial& other) const;
    /// Splits off the xi-part: returns (xi exponents a1..a3, remaining monomial).
    std::pair<std::array<int, 3>, Monomial> split_xi() const;
    int degree_of_kind(ParamKind k) const;

    std::string str() const;
    auto operator<=>(const Monomial&) const = default;

  private:
    std::vector<std::pair<uint16_t, uint16_t>> factors_;  // (code, exponent), sorted
};

}  // namespace wres
