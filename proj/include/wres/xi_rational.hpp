#pragma once

#include <complex>
#include <vector>

#include "wres/poly.hpp"

namespace wres {

/// Rational function of xi_n with FormalPoly numerator coefficients and
/// denominator (xi_n - i)^a (xi_n + i)^b.  Canonical form: trimmed numerator
/// sharing no (xi_n -+ i) factor with the denominator (checked by evaluation
/// at +-i).  Closed under +, *, d/dxi_n; the only divisions ever performed
/// are by (xi_n -+ i) and by scalars.
class XiRational {
  public:
    XiRational() = default;

    static XiRational zero() { return {}; }
    static XiRational one() { return from_formal(FormalPoly::one()); }
    static XiRational from_formal(FormalPoly c);
    static XiRational from_poly(std::vector<FormalPoly> num);
    static XiRational xin();                            // the variable itself
    static XiRational with_poles(std::vector<FormalPoly> num, int pole_plus, int pole_minus);
    /// 1/(1+xi_n^2)^k
    static XiRational inv_norm_sq(int k);

    bool is_zero() const { return num_.empty(); }
    int pole_plus() const { return ap_; }
    int pole_minus() const { return am_; }
    int num_degree() const { return int(num_.size()) - 1; }  // -1 for zero
    const std::vector<FormalPoly>& num() const { return num_; }

    XiRational d_xi() const;

    struct PartialFractions {
        std::vector<FormalPoly> poly;   // polynomial part, coefficient of xi_n^k
        std::vector<FormalPoly> plus;   // plus[m-1] = coefficient of (xi_n - i)^{-m}
        std::vector<FormalPoly> minus;  // minus[m-1] = coefficient of (xi_n + i)^{-m}
    };
    PartialFractions partial_fractions() const;
    static XiRational recompose(const PartialFractions& pf);

    /// Principal part at xi_n = +i; polynomial part and (xi_n + i)-poles dropped.
    XiRational pi_plus() const;
    /// Integral over the real line: 2 pi i times the residue at xi_n = i.
    /// Requires decay (num degree <= a + b - 2); pi grading bumped by one.
    FormalPoly integrate_line() const;

    std::complex<double> eval_complex(const ParamAssignment& a, std::complex<double> x) const;
    std::string str() const;

    friend XiRational operator+(const XiRational& f, const XiRational& g);
    friend XiRational operator-(const XiRational& f) { return f.scaled(GaussianRational(-1)); }
    friend XiRational operator-(const XiRational& f, const XiRational& g) { return f + (-g); }
    friend XiRational operator*(const XiRational& f, const XiRational& g);
    friend bool operator==(const XiRational& f, const XiRational& g) {
        return (f - g).is_zero();
    }

    XiRational scaled(const GaussianRational& s) const;
    XiRational scaled(const FormalPoly& s) const;

  private:
    void canonicalize();
    std::vector<FormalPoly> num_;  // num_[k] * xi_n^k
    int ap_ = 0;                   // pole order at +i
    int am_ = 0;                   // pole order at -i
};

XiRational xi_differentiate(const XiRational& f);

}  // namespace wres
