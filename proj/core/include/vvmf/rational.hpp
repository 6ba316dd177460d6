#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vvmf {

// Arbitrary precision rationals. gmpxx keeps results canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p". Decimal and exponent notation are rejected.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// num/den in canonical form. The two-argument mpq_class constructor does not
// reduce, and comparisons on unreduced values are unreliable.
Rational ratio(long num, long den);

bool is_integer(const Rational& r);

// Throws InconsistentData unless r is an integer that fits in a long.
long to_long(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

}  // namespace vvmf
