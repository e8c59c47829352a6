#pragma once

// Slow, independent reference implementations used only by the tests.
// Nothing here calls into the library under test.

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// Fibonacci word by iterating the substitution a -> ab, b -> a.
std::vector<unsigned> fibonacci_by_substitution(unsigned a, unsigned b, std::size_t n);

// Characteristic word of slope alpha = [0; a1, a2, ...] read off the
// cutting sequence floor((k+1) alpha) - floor(k alpha), k >= 1, with 0 -> a, 1 -> b.
std::vector<unsigned> cutting_sequence(const std::vector<unsigned>& slope_quotients, unsigned a, unsigned b,
                                       std::size_t n);

// 10^digits * value, truncated, for value = [a0; a1, ..., a_{m-1}].
mpz_class fixed_point(const std::vector<unsigned long>& quotients, unsigned digits);

struct Point {
  std::uint64_t x0;
  mpz_class x1;
  mpz_class x2;
  mpz_class delta;  // scaled by 10^digits
};

// Exhaustive sweep over x0 = 1..x_max with xi and eta given as fixed-point
// integers at scale 10^digits. Ties round down; records need a strict decrease.
class BruteForce {
 public:
  BruteForce(mpz_class xi, mpz_class eta, unsigned digits);
  static BruteForce square_of_cf(const std::vector<unsigned long>& quotients, unsigned digits = 200);

  Point at(std::uint64_t x0) const;
  std::vector<Point> minimal_points(std::uint64_t x_max) const;

 private:
  mpz_class xi_, eta_, scale_;
};

// First (1000) partial quotients [0; w1, w2, ...] of the Fibonacci word on (a, b).
std::vector<unsigned long> fibonacci_cf(unsigned a, unsigned b, std::size_t terms = 1000);

// Elementary divisors of a 2x3 integer matrix of rank 2 by row and column operations.
std::pair<long long, long long> smith_2x3(const long long (&m)[2][3]);

}  // namespace oracle
