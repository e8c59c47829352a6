#pragma once

#include <mpfr.h>

#include <string>

#include "dioph/numbers.hpp"

namespace dioph {

// Owning wrapper around an mpfr_t. Every arithmetic helper takes an explicit
// rounding direction so certified bounds can be assembled from directed
// roundings; the defaults round to nearest.
struct Precision {
  mpfr_prec_t bits;
};

inline constexpr Precision kDefaultPrecision{256};

class BigFloat {
 public:
  explicit BigFloat(Precision precision = kDefaultPrecision);
  BigFloat(long value, Precision precision = kDefaultPrecision);
  BigFloat(const Rational& value, mpfr_rnd_t rnd, Precision precision = kDefaultPrecision);
  BigFloat(const Integer& value, mpfr_rnd_t rnd, Precision precision = kDefaultPrecision);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Precision precision() const { return Precision{mpfr_get_prec(value_)}; }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const;
  // Fixed-point decimal with `digits` digits after the point.
  std::string to_string(int digits = 12) const;


  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

BigFloat ln(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat log2(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat neg(const BigFloat& a);

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);

}  // namespace dioph
