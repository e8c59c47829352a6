#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form "num/den"; the denominator is always written, even
// when it is 1, so every rational field in exports has the same shape.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

// Accepts "n", "p/q", and finite decimals such as "-0.618" (converted exactly).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den = 1);

// floor(q) and ceil(q) as integers.
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

std::uint64_t to_u64(const Integer& n);

}  // namespace dioph
