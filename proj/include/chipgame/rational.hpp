#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace chipgame {

/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Rational = mpq_class;

/// Parses "p/q" with p >= 0, q > 0 decimal integers. Anything else, including
/// floats and bare integers, is a Domain error.
Rational parse_rational(std::string_view text);

/// "num/den", denominator always present ("1/1", "0/1").
std::string format_rational(const Rational& value);

/// Decimal rendering to `digits` significant digits. Approximate.
std::string format_decimal(const Rational& value, int digits = 12);

}  // namespace chipgame
