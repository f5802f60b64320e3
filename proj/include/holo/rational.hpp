#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holo {

/// Exact rational number. GMP keeps every result in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError
/// with an empty path on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace holo
