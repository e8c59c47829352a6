#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dioph/numbers.hpp"

namespace dioph {

// a + b*sqrt(d) with d > 1 free of small square factors, or a rational (b = 0, d = 1).
// Only values over the same d combine; mixing fields yields nullopt.
struct QuadraticSurd {
  Rational a;
  Rational b;
  Integer d = 1;

  static QuadraticSurd rational(const Rational& q) { return QuadraticSurd{q, Rational(0), Integer(1)}; }
  bool is_rational() const { return b == 0; }
  std::string to_string() const;
};

std::optional<QuadraticSurd> add(const QuadraticSurd& x, const QuadraticSurd& y);
std::optional<QuadraticSurd> multiply(const QuadraticSurd& x, const QuadraticSurd& y);
QuadraticSurd scale(const QuadraticSurd& x, const Rational& factor);
QuadraticSurd shift(const QuadraticSurd& x, const Rational& offset);

// -1, 0 or +1, decided exactly.
int sign(const QuadraticSurd& x);

// sign(|x| - |y|); nullopt when the fields differ.
std::optional<int> compare_abs(const QuadraticSurd& x, const QuadraticSurd& y);

// n with x in (n - 1/2, n + 1/2].
Integer nearest_integer(const QuadraticSurd& x);

// Value of [h0; h1, ..., h_{m-1}, period, period, ...]. Period terms must be positive.
QuadraticSurd periodic_cf_value(const std::vector<Integer>& head, const std::vector<Integer>& period);

}  // namespace dioph
