#pragma once

#include <span>
#include <utility>

#include "dioph/bigfloat.hpp"
#include "dioph/numbers.hpp"

namespace dioph {

// log2 of 2^(60 n^2) delta^(-7n) log(4D) log log(4D), with natural logarithms.
// delta = 1 is accepted as the closure of (0, 1).
BigFloat evertse_count_log2(unsigned n, const Rational& delta, const Integer& D);

// The same bound specialised to n = 3, D = 2d, evaluated as the product
// 2^540 delta^-21 log(8d) log log(8d) before taking log2.
BigFloat evertse_count_log2_n3(const Rational& delta, const Integer& d);

struct MeasureParams {
  Rational c;
  Integer d;
  Integer H;
};

struct MeasureValue {
  BigFloat w;          // exp(c log d log log d)
  BigFloat log_bound;  // -w log H, the natural log of H^(-w)
};

MeasureValue measure_w(const MeasureParams& params);

// Earlier measure exp(c (log d)^2 (log log d)^2), for comparison.
BigFloat measure_w_squared_logs(const Rational& c, const Integer& d);

// (max |coefficient|, degree); coefficients ordered from the constant term up.
std::pair<Integer, unsigned> naive_height_and_degree(std::span<const Integer> coefficients);

}  // namespace dioph
