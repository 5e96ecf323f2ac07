#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace interlace {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). GMP keeps the invariant after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// Parses "p/q", "p" or "-p/q". Throws Error(Parse) on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text (q > 0, lowest terms). Integers keep the "/1".
std::string to_string(const Rational& q);

/// Exactly `digits` significant decimal digits, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits = 12);

/// Decimal approximation labeled as such for reports, e.g. "≈1.70710678119".
std::string approx_label(const Rational& q);

/// 2^exponent for any integer exponent.
Rational pow2(int exponent);

/// Default bracket width, 2^-40.
inline Rational default_width() { return pow2(-40); }

/// Rational upper bound u with sqrt(q) <= u <= sqrt(q) + width, q >= 0.
Rational sqrt_upper(const Rational& q, const Rational& width);

/// Returns true and the root when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace interlace
