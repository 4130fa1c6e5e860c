#include "wres/clifford.hpp"

namespace wres {

const CliffordMatrix& CliffordMatrix::zero() {
    static const CliffordMatrix z;
    return z;
}

const CliffordMatrix& CliffordMatrix::identity() {
    static const CliffordMatrix id = [] {
        CliffordMatrix m;
        for (int k = 0; k < kDim; ++k) m.at(k, k) = XiRational::one();
        return m;
    }();
    return id;
}

CliffordMatrix CliffordMatrix::scalar(const XiRational& s) {
    CliffordMatrix m;
    for (int k = 0; k < kDim; ++k) m.at(k, k) = s;
    return m;
}

XiRational CliffordMatrix::trace() const {
    XiRational t;
    for (int k = 0; k < kDim; ++k) t = t + at(k, k);
    return t;
}

bool CliffordMatrix::is_zero() const {
    for (auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

CliffordMatrix CliffordMatrix::scaled(const XiRational& s) const {
    CliffordMatrix out;
    if (s.is_zero()) return out;
    for (int k = 0; k < kDim * kDim; ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k] * s;
    return out;
}

CliffordMatrix CliffordMatrix::scaled(const FormalPoly& s) const {
    return scaled(XiRational::from_formal(s));
}

CliffordMatrix CliffordMatrix::scaled(const GaussianRational& s) const {
    CliffordMatrix out;
    if (s.is_zero()) return out;
    for (int k = 0; k < kDim * kDim; ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k].scaled(s);
    return out;
}

CliffordMatrix CliffordMatrix::d_xi() const {
    CliffordMatrix out;
    for (int k = 0; k < kDim * kDim; ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k].d_xi();
    return out;
}

CliffordMatrix CliffordMatrix::pi_plus() const {
    CliffordMatrix out;
    for (int k = 0; k < kDim * kDim; ++k)
        if (!e_[k].is_zero()) out.e_[k] = e_[k].pi_plus();
    return out;
}

CliffordMatrix operator+(const CliffordMatrix& a, const CliffordMatrix& b) {
    CliffordMatrix out;
    for (int k = 0; k < CliffordMatrix::kDim * CliffordMatrix::kDim; ++k)
        out.e_[k] = a.e_[k] + b.e_[k];
    return out;
}

CliffordMatrix operator-(const CliffordMatrix& a) {
    CliffordMatrix out;
    for (int k = 0; k < CliffordMatrix::kDim * CliffordMatrix::kDim; ++k)
        if (!a.e_[k].is_zero()) out.e_[k] = -a.e_[k];
    return out;
}

CliffordMatrix operator*(const CliffordMatrix& a, const CliffordMatrix& b) {
    constexpr int n = CliffordMatrix::kDim;
    CliffordMatrix out;
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            const XiRational& ark = a.at(r, k);
            if (ark.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                const XiRational& bkc = b.at(k, c);
                if (bkc.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + ark * bkc;
            }
        }
    return out;
}

bool operator==(const CliffordMatrix& a, const CliffordMatrix& b) {
    for (int k = 0; k < CliffordMatrix::kDim * CliffordMatrix::kDim; ++k)
        if (!(a.e_[k] == b.e_[k])) return false;
    return true;
}

namespace {

int insertion_sign(int subset, int j) {
    // sign of sorting index j (0-based bit) into the sorted subset
    int below = subset & ((1 << j) - 1);
    return (__builtin_popcount(below) % 2 == 0) ? 1 : -1;
}

CliffordMatrix eps(int j) {
    CliffordMatrix m;
    for (int s = 0; s < 16; ++s)
        if (!((s >> j) & 1))
            m.at(s | (1 << j), s) =
                XiRational::from_formal(FormalPoly::constant(GaussianRational(insertion_sign(s, j))));
    return m;
}

CliffordMatrix iota(int j) {
    CliffordMatrix m;
    for (int s = 0; s < 16; ++s)
        if ((s >> j) & 1)
            m.at(s & ~(1 << j), s) =
                XiRational::from_formal(FormalPoly::constant(GaussianRational(insertion_sign(s, j))));
    return m;
}

}  // namespace

const CliffordGenerators& build_generators() {
    static const CliffordGenerators g = [] {
        CliffordGenerators out;
        for (int j = 0; j < 4; ++j) {
            CliffordMatrix e = eps(j), io = iota(j);
            out.c[j] = e - io;
            out.chat[j] = e + io;
        }
        return out;
    }();
    return g;
}

CliffordMatrix clifford_of_covector(const std::array<FormalPoly, 4>& coeffs) {
    CliffordMatrix out;
    for (int j = 0; j < 4; ++j)
        if (!coeffs[j].is_zero()) out = out + build_generators().c[j].scaled(coeffs[j]);
    return out;
}

XiRational trace(const CliffordMatrix& m) { return m.trace(); }

}  // namespace wres
