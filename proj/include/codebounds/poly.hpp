#pragma once

#include "codebounds/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cb {

/// Sorted multiset of variable ids; a variable of exponent e appears e times.
using Monomial = std::vector<std::uint16_t>;

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto v : m) {
            h ^= v + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    return out;
}

template <class S>
inline bool scalar_is_zero(const S& s) {
    return s == 0;
}

inline double scalar_to_double(const double& d) { return d; }
inline double scalar_to_double(const Rational& r) { return r.get_d(); }

/// Sparse polynomial with coefficients in S (Rational or double).
template <class S>
class Poly {
public:
    using Map = std::unordered_map<Monomial, S, MonomialHash>;

    Poly() = default;

    static Poly constant(const S& c) {
        Poly p;
        p.add(Monomial{}, c);
        return p;
    }
    static Poly variable(std::uint16_t v, const S& c = S(1)) {
        Poly p;
        p.add(Monomial{v}, c);
        return p;
    }

    void add(const Monomial& m, const S& c) {
        if (scalar_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (scalar_is_zero(it->second)) terms_.erase(it);
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Poly& operator*=(const S& s) {
        if (scalar_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        if (a.terms_.empty() || b.terms_.empty()) return out;
        out.terms_.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb_] : b.terms_) out.add(mono_mul(ma, mb), ca * cb_);
        return out;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }

    Poly pow(int e) const {
        Poly r = constant(S(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Partial derivative with respect to variable v.
    Poly derivative(std::uint16_t v) const {
        Poly out;
        for (const auto& [m, c] : terms_) {
            auto lo = std::lower_bound(m.begin(), m.end(), v);
            auto hi = std::upper_bound(lo, m.end(), v);
            long e = hi - lo;
            if (e == 0) continue;
            Monomial d(m.begin(), m.end());
            d.erase(d.begin() + (lo - m.begin()));
            out.add(d, c * S(e));
        }
        return out;
    }

    /// Drops coefficients with absolute value at most eps (inexact scalars).
    void chop(double eps) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (std::abs(scalar_to_double(it->second)) <= eps)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    const Map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    std::vector<std::pair<Monomial, S>> sorted_terms() const {
        std::vector<std::pair<Monomial, S>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

using RPoly = Poly<Rational>;
using DPoly = Poly<double>;

} // namespace cb
