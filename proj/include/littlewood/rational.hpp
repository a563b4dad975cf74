#pragma once

#include <gmpxx.h>

#include <string>

namespace littlewood {

/// Arbitrary-precision rational; GMP keeps it canonical (den > 0, gcd 1).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Inverse of to_string; throws Error(ParseError) on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace littlewood
