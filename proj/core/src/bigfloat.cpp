#include "dioph/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace dioph {

BigFloat::BigFloat(Precision precision) {
  mpfr_init2(value_, precision.bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision precision) {
  mpfr_init2(value_, precision.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_rnd_t rnd, Precision precision) {
  mpfr_init2(value_, precision.bits);
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const Integer& value, mpfr_rnd_t rnd, Precision precision) {
  mpfr_init2(value_, precision.bits);
  mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision().bits);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision().bits);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision().bits);
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

double BigFloat::to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

std::string BigFloat::to_string(int digits) const {
  int n = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

namespace {

Precision result_precision(const BigFloat& a, const BigFloat& b) {
  return Precision{std::max(a.precision().bits, b.precision().bits)};
}

}  // namespace

BigFloat ln(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), rnd);
  return r;
}

BigFloat log2(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_log2(r.get(), x.get(), rnd);
  return r;
}

BigFloat exp(const BigFloat& x, mpfr_rnd_t rnd) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), rnd);
  return r;
}

BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(result_precision(a, b));
  mpfr_add(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(result_precision(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(result_precision(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat r(result_precision(a, b));
  mpfr_div(r.get(), a.get(), b.get(), rnd);
  return r;
}

BigFloat neg(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b); }

}  // namespace dioph
