#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covagram {

// Exact rational scalar used for every coordinate, area and width in this
// library. Nothing is ever rounded; all comparisons are exact.
using Rational = mpq_class;
using BigInt = mpz_class;

// Builds num/den reduced to lowest terms with a positive denominator.
// Throws std::invalid_argument when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

// Accepts "7", "-3/4", "0.25", "-1.5", ".5". Decimal strings are exact
// (base-10 denominator). Exponent notation is not supported.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Fixed-point rendering with `digits` fractional digits, rounded to nearest
// with ties away from zero. Lossy by construction.
std::string format_decimal(const Rational& value, int digits);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

}  // namespace covagram
