#pragma once

#include <optional>

#include "wres/scalar.hpp"

namespace wres {

/// First-order x_n jet at the boundary point: value and (optionally) its
/// normal derivative.  A missing derivative means the symbol's x_n-jet is
/// not representable in the parameter set (and is never needed); asking for
/// it is an error rather than a silent zero.
template <typename T>
struct Jet {
    T value{};
    std::optional<T> dxn;

    Jet() = default;
    Jet(T v) : value(std::move(v)) {}
    Jet(T v, T d) : value(std::move(v)), dxn(std::move(d)) {}

    static Jet constant(T v) {
        Jet j(v);
        j.dxn = T{};  // derivative identically zero
        return j;
    }

    bool has_dxn() const { return dxn.has_value(); }
    const T& dxn_or_throw() const {
        if (!dxn) throw Error("Jet: x_n derivative not available for this symbol");
        return *dxn;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet out(a.value + b.value);
        if (a.dxn && b.dxn) out.dxn = *a.dxn + *b.dxn;
        return out;
    }
    friend Jet operator-(const Jet& a) {
        Jet out(-a.value);
        if (a.dxn) out.dxn = -*a.dxn;
        return out;
    }
    friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
    /// Product rule: (fg)' = f'g + fg'.
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet out(a.value * b.value);
        if (a.dxn && b.dxn) out.dxn = *a.dxn * b.value + a.value * *b.dxn;
        return out;
    }

    template <typename F>
    Jet map(F&& f) const {
        Jet out(f(value));
        if (dxn) out.dxn = f(*dxn);
        return out;
    }
};

}  // namespace wres
