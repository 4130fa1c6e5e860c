#pragma once

#include <array>

#include "wres/xi_rational.hpp"

namespace wres {

/// 16x16 matrix with XiRational entries, acting on the exterior algebra of
/// R^4.  Basis: subsets of {1,2,3,4} in binary-counter order (bit t-1 set
/// <=> e_t present); exterior multiplication carries the sign of sorting the
/// new index into the subset.
class CliffordMatrix {
  public:
    static constexpr int kDim = 16;

    CliffordMatrix() = default;

    static const CliffordMatrix& zero();
    static const CliffordMatrix& identity();
    static CliffordMatrix scalar(const XiRational& s);
    static CliffordMatrix scalar(const FormalPoly& s) {
        return scalar(XiRational::from_formal(s));
    }

    const XiRational& at(int r, int c) const { return e_[r * kDim + c]; }
    XiRational& at(int r, int c) { return e_[r * kDim + c]; }

    XiRational trace() const;
    bool is_zero() const;

    CliffordMatrix scaled(const XiRational& s) const;
    CliffordMatrix scaled(const FormalPoly& s) const;
    CliffordMatrix scaled(const GaussianRational& s) const;
    CliffordMatrix d_xi() const;
    CliffordMatrix pi_plus() const;

    friend CliffordMatrix operator+(const CliffordMatrix& a, const CliffordMatrix& b);
    friend CliffordMatrix operator-(const CliffordMatrix& a);
    friend CliffordMatrix operator-(const CliffordMatrix& a, const CliffordMatrix& b) {
        return a + (-b);
    }
    friend CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b);
    friend bool operator==(const CliffordMatrix& a, const CliffordMatrix& b);

  private:
    std::array<XiRational, kDim * kDim> e_;
};

struct CliffordGenerators {
    std::array<CliffordMatrix, 4> c;     // c(e_j) = eps_j - iota_j, squares to -1
    std::array<CliffordMatrix, 4> chat;  // chat(e_j) = eps_j + iota_j, squares to +1
};

/// Exterior/interior assembly of the two anticommuting Clifford actions.
const CliffordGenerators& build_generators();

inline const CliffordMatrix& gen_c(int j) { return build_generators().c[j - 1]; }
inline const CliffordMatrix& gen_chat(int j) { return build_generators().chat[j - 1]; }

/// sum_j coeffs[j-1] * c(e_j)
CliffordMatrix clifford_of_covector(const std::array<FormalPoly, 4>& coeffs);

XiRational trace(const CliffordMatrix& m);

}  // namespace wres
