#include "dioph/bounds.hpp"

#include <string>

#include "dioph/errors.hpp"

namespace dioph {

namespace {

// log log x; throws unless it is positive.
BigFloat checked_loglog(const BigFloat& x, const char* what) {
  BigFloat l = ln(x);
  if (l <= BigFloat(1L)) throw DomainError(std::string("log log of ") + what + " is not positive");
  return ln(l);
}

}  // namespace

BigFloat evertse_count_log2(unsigned n, const Rational& delta, const Integer& D) {
  if (n < 2) throw DomainError("Evertse bound needs n >= 2");
  if (delta <= 0 || delta > 1) throw DomainError("Evertse bound needs 0 < delta <= 1");
  if (D < 1) throw DomainError("Evertse bound needs D >= 1");
  BigFloat four_d(Integer(4 * D), MPFR_RNDN);
  BigFloat loglog = checked_loglog(four_d, "4D");
  BigFloat sum(static_cast<long>(60 * n * n));
  BigFloat inv_delta(Rational(1 / delta), MPFR_RNDN);
  sum = sum + BigFloat(static_cast<long>(7 * n)) * log2(inv_delta);
  sum = sum + log2(ln(four_d));
  sum = sum + log2(loglog);
  return sum;
}

BigFloat evertse_count_log2_n3(const Rational& delta, const Integer& d) {
  if (delta <= 0 || delta > 1) throw DomainError("Evertse bound needs 0 < delta <= 1");
  if (d < 1) throw DomainError("degree bound d must be positive");
  BigFloat eight_d(Integer(8 * d), MPFR_RNDN);
  BigFloat loglog = checked_loglog(eight_d, "8d");
  BigFloat t(1L, Precision{1024});
  mpfr_mul_2ui(t.get(), t.get(), 540, MPFR_RNDN);
  BigFloat delta_f(delta, MPFR_RNDN, Precision{1024});
  BigFloat delta_pow(Precision{1024});
  mpfr_pow_si(delta_pow.get(), delta_f.get(), -21, MPFR_RNDN);
  t = t * delta_pow * ln(eight_d) * loglog;
  return log2(t);
}

MeasureValue measure_w(const MeasureParams& params) {
  if (params.d < 3) throw DomainError("measure needs d >= 3");
  if (params.H < 2) throw DomainError("measure needs H >= 2");
  if (params.c <= 0) throw DomainError("measure needs c > 0");
  BigFloat d(params.d, MPFR_RNDN);
  BigFloat log_d = ln(d);
  BigFloat exponent = BigFloat(params.c, MPFR_RNDN) * log_d * ln(log_d);
  BigFloat w = exp(exponent);
  BigFloat log_bound = neg(w * ln(BigFloat(params.H, MPFR_RNDN)));
  return MeasureValue{std::move(w), std::move(log_bound)};
}

BigFloat measure_w_squared_logs(const Rational& c, const Integer& d) {
  if (d < 3) throw DomainError("measure needs d >= 3");
  BigFloat log_d = ln(BigFloat(d, MPFR_RNDN));
  BigFloat loglog = ln(log_d);
  return exp(BigFloat(c, MPFR_RNDN) * log_d * log_d * loglog * loglog);
}

std::pair<Integer, unsigned> naive_height_and_degree(std::span<const Integer> coefficients) {
  std::size_t degree = coefficients.size();
  while (degree > 0 && coefficients[degree - 1] == 0) --degree;
  if (degree == 0) throw ZeroPolynomial("zero polynomial has no height");
  Integer height = 0;
  for (std::size_t k = 0; k < degree; ++k) {
    Integer a = ::abs(coefficients[k]);
    if (a > height) height = a;
  }
  return {height, static_cast<unsigned>(degree - 1)};
}

}  // namespace dioph
