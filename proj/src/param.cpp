#include "wres/param.hpp"

#include <algorithm>

namespace wres {

namespace {
// canonical order of the six G pairs
constexpr std::pair<int, int> kGPairs[6] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
}  // namespace

ParamId ParamId::g(int i, int j) {
    for (int idx = 0; idx < 6; ++idx)
        if (kGPairs[idx].first == i && kGPairs[idx].second == j) return ParamId(uint16_t(4 + idx));
    throw Error("ParamId::g: need 1 <= i < j <= 4, got (" + std::to_string(i) + "," +
                std::to_string(j) + ")");
}

ParamKind ParamId::kind() const {
    if (code_ == 0) return ParamKind::Hprime;
    if (code_ < 16) return ParamKind::G;
    if (code_ < 32) return ParamKind::H;
    if (code_ < 36) return ParamKind::Dv;
    if (code_ < 40) return ParamKind::V;
    if (code_ < 44) return ParamKind::Dw;
    if (code_ < 48) return ParamKind::W;
    return ParamKind::Xi;
}

int ParamId::index1() const {
    switch (kind()) {
        case ParamKind::Hprime: return 0;
        case ParamKind::G: return kGPairs[code_ - 4].first;
        case ParamKind::H: return (code_ - 16) / 4 + 1;
        case ParamKind::Dv: return code_ - 32 + 1;
        case ParamKind::V: return code_ - 36 + 1;
        case ParamKind::Dw: return code_ - 40 + 1;
        case ParamKind::W: return code_ - 44 + 1;
        case ParamKind::Xi: return code_ - 48 + 1;
    }
    return 0;
}

int ParamId::index2() const {
    switch (kind()) {
        case ParamKind::G: return kGPairs[code_ - 4].second;
        case ParamKind::H: return (code_ - 16) % 4 + 1;
        default: return 0;
    }
}

std::string ParamId::name() const {
    switch (kind()) {
        case ParamKind::Hprime: return "h";
        case ParamKind::G: return "G" + std::to_string(index1()) + std::to_string(index2());
        case ParamKind::H: return "H" + std::to_string(index1()) + std::to_string(index2());
        case ParamKind::Dv: return "Dv" + std::to_string(index1());
        case ParamKind::V: return "v" + std::to_string(index1());
        case ParamKind::Dw: return "Dw" + std::to_string(index1());
        case ParamKind::W: return "w" + std::to_string(index1());
        case ParamKind::Xi: return "xi" + std::to_string(index1());
    }
    return "?";
}

Monomial Monomial::of(ParamId p, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.push_back({p.code(), uint16_t(exp)});
    return m;
}

int Monomial::exponent(ParamId p) const {
    for (auto& [c, e] : factors_)
        if (c == p.code()) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [c, e] : factors_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.push_back({a->first, uint16_t(a->second + b->second)});
            ++a, ++b;
        }
    }
    return out;
}

std::pair<std::array<int, 3>, Monomial> Monomial::split_xi() const {
    std::array<int, 3> xi{0, 0, 0};
    Monomial rest;
    for (auto& [c, e] : factors_) {
        if (c >= 48)
            xi[c - 48] = e;
        else
            rest.factors_.push_back({c, e});
    }
    return {xi, rest};
}

int Monomial::degree_of_kind(ParamKind k) const {
    int d = 0;
    for (auto& [c, e] : factors_)
        if (ParamId::from_code(c).kind() == k) d += e;
    return d;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (auto& [c, e] : factors_) {
        if (!s.empty()) s += "*";
        s += ParamId::from_code(c).name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace wres
