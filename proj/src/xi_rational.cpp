#include "wres/xi_rational.hpp"

namespace wres {

namespace {

using Coeffs = std::vector<FormalPoly>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Coeffs add(const Coeffs& a, const Coeffs& b) {
    Coeffs out(std::max(a.size(), b.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.size()) out[k] = out[k] + a[k];
        if (k < b.size()) out[k] = out[k] + b[k];
    }
    trim(out);
    return out;
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    trim(out);
    return out;
}

Coeffs scale(const Coeffs& a, const GaussianRational& s) {
    Coeffs out;
    out.reserve(a.size());
    for (auto& c : a) out.push_back(c.scaled(s));
    trim(out);
    return out;
}

Coeffs scale(const Coeffs& a, const FormalPoly& s) {
    Coeffs out;
    out.reserve(a.size());
    for (auto& c : a) out.push_back(c * s);
    trim(out);
    return out;
}

Coeffs deriv(const Coeffs& a) {
    if (a.size() <= 1) return {};
    Coeffs out(a.size() - 1);
    for (size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k].scaled(GaussianRational(long(k)));
    trim(out);
    return out;
}

FormalPoly eval_at(const Coeffs& a, const GaussianRational& x) {
    FormalPoly acc;
    for (size_t k = a.size(); k-- > 0;) acc = acc.scaled(x) + a[k];
    return acc;
}

/// Horner synthetic division by (xi_n - root).  Returns the quotient; the
/// remainder must vanish (only exact cancellations are ever divided out).
Coeffs divide_linear(const Coeffs& a, const GaussianRational& root) {
    if (a.empty()) return {};
    Coeffs quo(a.size() - 1);
    FormalPoly carry;
    for (size_t k = a.size(); k-- > 1;) {
        carry = a[k] + carry.scaled(root);
        quo[k - 1] = carry;
    }
    if (!(a[0] + carry.scaled(root)).is_zero())
        throw Error("XiRational: inexact division by linear factor");
    trim(quo);
    return quo;
}

/// First `count` Taylor coefficients of the polynomial at xi_n = c
/// (repeated synthetic division, keeping remainders).
Coeffs taylor_at(Coeffs a, const GaussianRational& c, int count) {
    Coeffs out(count);
    for (int m = 0; m < count && !a.empty(); ++m) {
        Coeffs quo(a.size() > 1 ? a.size() - 1 : 0);
        FormalPoly carry;
        for (size_t k = a.size(); k-- > 1;) {
            carry = a[k] + carry.scaled(c);
            quo[k - 1] = carry;
        }
        out[m] = a[0] + carry.scaled(c);
        trim(quo);
        a = std::move(quo);
    }
    return out;
}

/// Series of (u + c)^{-b} to `count` terms: u^m coefficient is
/// (-1)^m C(b+m-1, m) c^{-b-m}.
std::vector<GaussianRational> inv_power_series(const GaussianRational& c, int b, int count) {
    std::vector<GaussianRational> out(count);
    if (b == 0) {
        if (count > 0) out[0] = GaussianRational(1);
        return out;
    }
    GaussianRational cinv = c.inverse();
    GaussianRational cpow = GaussianRational(1);
    for (int k = 0; k < b; ++k) cpow = cpow * cinv;  // c^{-b}
    Rational binom(1);
    for (int m = 0; m < count; ++m) {
        if (m > 0) {
            binom = binom * Rational(b + m - 1) / Rational(m);
            cpow = cpow * cinv;
        }
        GaussianRational term = cpow * GaussianRational(binom);
        out[m] = (m % 2 == 0) ? term : -term;
    }
    return out;
}

const GaussianRational kI = GaussianRational::i();
const GaussianRational kMinusI = GaussianRational(Rational(0), Rational(-1));
const GaussianRational kTwoI = GaussianRational(Rational(0), Rational(2));

const Coeffs kLinPlus = {FormalPoly::constant(kMinusI), FormalPoly::one()};  // xi_n - i
const Coeffs kLinMinus = {FormalPoly::constant(kI), FormalPoly::one()};     // xi_n + i

/// sum_m parts[m-1]/(xi_n -+ i)^m over the common denominator
XiRational principal_part(const std::vector<FormalPoly>& parts, bool at_plus_i) {
    int M = int(parts.size());
    if (M == 0) return XiRational::zero();
    const Coeffs& lin = at_plus_i ? kLinPlus : kLinMinus;
    std::vector<Coeffs> powers(M);
    powers[0] = {FormalPoly::one()};
    for (int k = 1; k < M; ++k) powers[k] = mul(powers[k - 1], lin);
    Coeffs numtotal;
    for (int m = 1; m <= M; ++m) {
        if (parts[m - 1].is_zero()) continue;
        numtotal = add(numtotal, scale(powers[M - m], parts[m - 1]));
    }
    return at_plus_i ? XiRational::with_poles(std::move(numtotal), M, 0)
                     : XiRational::with_poles(std::move(numtotal), 0, M);
}

}  // namespace

XiRational XiRational::from_formal(FormalPoly c) {
    XiRational f;
    if (!c.is_zero()) f.num_ = {std::move(c)};
    return f;
}

XiRational XiRational::from_poly(std::vector<FormalPoly> num) {
    XiRational f;
    f.num_ = std::move(num);
    trim(f.num_);
    return f;
}

XiRational XiRational::xin() {
    return from_poly({FormalPoly::zero(), FormalPoly::one()});
}

XiRational XiRational::with_poles(std::vector<FormalPoly> num, int pole_plus, int pole_minus) {
    XiRational f;
    f.num_ = std::move(num);
    f.ap_ = pole_plus;
    f.am_ = pole_minus;
    f.canonicalize();
    return f;
}

XiRational XiRational::inv_norm_sq(int k) {
    return with_poles({FormalPoly::one()}, k, k);
}

void XiRational::canonicalize() {
    trim(num_);
    if (num_.empty()) {
        ap_ = am_ = 0;
        return;
    }
    while (ap_ > 0 && eval_at(num_, kI).is_zero()) {
        num_ = divide_linear(num_, kI);
        --ap_;
    }
    while (am_ > 0 && eval_at(num_, kMinusI).is_zero()) {
        num_ = divide_linear(num_, kMinusI);
        --am_;
    }
}

XiRational operator+(const XiRational& f, const XiRational& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    int ap = std::max(f.ap_, g.ap_), am = std::max(f.am_, g.am_);
    auto lift = [&](const XiRational& h) {
        Coeffs n = h.num_;
        for (int k = 0; k < ap - h.ap_; ++k) n = mul(n, kLinPlus);
        for (int k = 0; k < am - h.am_; ++k) n = mul(n, kLinMinus);
        return n;
    };
    return XiRational::with_poles(add(lift(f), lift(g)), ap, am);
}

XiRational operator*(const XiRational& f, const XiRational& g) {
    if (f.is_zero() || g.is_zero()) return XiRational::zero();
    return XiRational::with_poles(mul(f.num_, g.num_), f.ap_ + g.ap_, f.am_ + g.am_);
}

XiRational XiRational::scaled(const GaussianRational& s) const {
    if (s.is_zero() || is_zero()) return zero();
    XiRational out = *this;
    out.num_ = scale(out.num_, s);
    return out;
}

XiRational XiRational::scaled(const FormalPoly& s) const {
    if (s.is_zero() || is_zero()) return zero();
    XiRational out;
    out.num_ = scale(num_, s);
    out.ap_ = ap_;
    out.am_ = am_;
    out.canonicalize();
    return out;
}

// f = N (x-i)^{-a} (x+i)^{-b}
// f' = [N'(x-i)(x+i) - aN(x+i) - bN(x-i)] (x-i)^{-a-1} (x+i)^{-b-1}
XiRational XiRational::d_xi() const {
    if (is_zero()) return zero();
    Coeffs n = mul(mul(deriv(num_), kLinPlus), kLinMinus);
    if (ap_ != 0) n = add(n, scale(mul(num_, kLinMinus), GaussianRational(Rational(-ap_))));
    if (am_ != 0) n = add(n, scale(mul(num_, kLinPlus), GaussianRational(Rational(-am_))));
    return with_poles(std::move(n), ap_ + 1, am_ + 1);
}

XiRational::PartialFractions XiRational::partial_fractions() const {
    PartialFractions pf;
    if (is_zero()) return pf;
    if (ap_ > 0) {
        Coeffs r = taylor_at(num_, kI, ap_);
        auto e = inv_power_series(kTwoI, am_, ap_);
        pf.plus.assign(ap_, FormalPoly::zero());
        for (int m = 1; m <= ap_; ++m) {
            FormalPoly t;
            for (int k = 0; k <= ap_ - m; ++k) t = t + r[k].scaled(e[ap_ - m - k]);
            pf.plus[m - 1] = t;
        }
    }
    if (am_ > 0) {
        Coeffs r = taylor_at(num_, kMinusI, am_);
        auto e = inv_power_series(-kTwoI, ap_, am_);
        pf.minus.assign(am_, FormalPoly::zero());
        for (int m = 1; m <= am_; ++m) {
            FormalPoly t;
            for (int k = 0; k <= am_ - m; ++k) t = t + r[k].scaled(e[am_ - m - k]);
            pf.minus[m - 1] = t;
        }
    }
    XiRational rest = *this - principal_part(pf.plus, true) - principal_part(pf.minus, false);
    if (rest.ap_ != 0 || rest.am_ != 0)
        throw Error("partial_fractions: residual poles after principal-part extraction");
    pf.poly = rest.num_;
    return pf;
}

XiRational XiRational::recompose(const PartialFractions& pf) {
    return from_poly(pf.poly) + principal_part(pf.plus, true) + principal_part(pf.minus, false);
}

XiRational XiRational::pi_plus() const {
    if (ap_ == 0) return zero();
    auto pf = partial_fractions();
    return principal_part(pf.plus, true);
}

FormalPoly XiRational::integrate_line() const {
    if (is_zero()) return FormalPoly::zero();
    if (num_degree() > ap_ + am_ - 2)
        throw Error("integrate_line: integrand does not decay (num degree " +
                    std::to_string(num_degree()) + " vs pole orders " + std::to_string(ap_) +
                    "+" + std::to_string(am_) + ")");
    if (ap_ == 0) return FormalPoly::zero();
    auto pf = partial_fractions();
    return pf.plus[0].scaled(kTwoI).raised_pi(1);  // 2 pi i * residue at +i
}

std::complex<double> XiRational::eval_complex(const ParamAssignment& a,
                                              std::complex<double> x) const {
    std::complex<double> n = 0.0;
    for (size_t k = num_.size(); k-- > 0;) n = n * x + num_[k].eval_complex(a);
    std::complex<double> i(0.0, 1.0);
    for (int k = 0; k < ap_; ++k) n /= (x - i);
    for (int k = 0; k < am_; ++k) n /= (x + i);
    return n;
}

std::string XiRational::str() const {
    if (is_zero()) return "0";
    std::string n;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) continue;
        if (!n.empty()) n += " + ";
        n += "(" + num_[k].str() + ")";
        if (k == 1) n += "*xi_n";
        if (k > 1) n += "*xi_n^" + std::to_string(k);
    }
    if (ap_ == 0 && am_ == 0) return n;
    std::string d;
    if (ap_ > 0) {
        d += "(xi_n-i)";
        if (ap_ > 1) d += "^" + std::to_string(ap_);
    }
    if (am_ > 0) {
        if (!d.empty()) d += "*";
        d += "(xi_n+i)";
        if (am_ > 1) d += "^" + std::to_string(am_);
    }
    return "[" + n + "] / [" + d + "]";
}

XiRational xi_differentiate(const XiRational& f) { return f.d_xi(); }

}  // namespace wres
