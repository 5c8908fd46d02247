#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ncv {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Formats as "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& value);

/// num / den in lowest terms (the two-argument mpq_class constructor does not
/// reduce). Throws InvalidInput for den == 0.
Rational ratio(long num, long den);

inline int sign(const Rational& value) { return sgn(value); }

/// base^exponent for a possibly negative exponent.
Rational rational_pow(const Rational& base, long exponent);

}  // namespace ncv
