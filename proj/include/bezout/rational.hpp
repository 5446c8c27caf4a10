#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bezout {

/// Exact rational number. mpq_class keeps gcd(|num|, den) = 1 and den > 0
/// after every arithmetic operation; values built from raw parts must go
/// through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p" or "p/q" with optional leading '-'. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

Rational pow(const Rational& base, std::uint64_t exponent);

} // namespace bezout
