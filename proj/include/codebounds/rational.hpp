#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs outside an operation's domain (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched word lengths or alphabets.
struct DimensionError : DomainError {
    using DomainError::DomainError;
};

Integer binom(long n, long k);
Integer factorial(long n);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& r);
double to_double(const Rational& r);

} // namespace cb
