#pragma once

#include "codebounds/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace cb {

/// 64-bit integer whose arithmetic throws on overflow. Used for block entries
/// that are integral by construction.
struct CheckedInt {
    std::int64_t v = 0;

    CheckedInt() = default;
    CheckedInt(std::int64_t x) : v(x) {}

    CheckedInt& operator+=(const CheckedInt& o) {
        if (__builtin_add_overflow(v, o.v, &v)) throw std::overflow_error("integer overflow in block entry");
        return *this;
    }
    CheckedInt& operator-=(const CheckedInt& o) {
        if (__builtin_sub_overflow(v, o.v, &v)) throw std::overflow_error("integer overflow in block entry");
        return *this;
    }
    CheckedInt& operator*=(const CheckedInt& o) {
        if (__builtin_mul_overflow(v, o.v, &v)) throw std::overflow_error("integer overflow in block entry");
        return *this;
    }
    friend CheckedInt operator+(CheckedInt a, const CheckedInt& b) { return a += b; }
    friend CheckedInt operator-(CheckedInt a, const CheckedInt& b) { return a -= b; }
    friend CheckedInt operator*(CheckedInt a, const CheckedInt& b) { return a *= b; }
    CheckedInt operator-() const { return CheckedInt(0) - *this; }
    friend bool operator==(const CheckedInt& a, const CheckedInt& b) { return a.v == b.v; }
    friend bool operator==(const CheckedInt& a, int b) { return a.v == b; }
};

inline double scalar_to_double(const CheckedInt& c) { return static_cast<double>(c.v); }
inline Rational scalar_to_rational(const CheckedInt& c) { return Rational(mpz_class(std::to_string(c.v))); }
inline Rational scalar_to_rational(double d) { return Rational(d); }

/// Converts an integral rational; throws if it is not an integer or too large.
inline CheckedInt checked_from_rational(const Rational& r) {
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) throw std::overflow_error("coefficient not a small integer");
    return CheckedInt(r.get_num().get_si());
}

} // namespace cb
