#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dioph/bounds.hpp"
#include "dioph/errors.hpp"

using namespace dioph;
using Bin = boost::multiprecision::cpp_bin_float_100;

namespace {

double value(const BigFloat& x) { return x.to_double(MPFR_RNDN); }

Bin evertse_reference(unsigned n, const Bin& inv_delta, const Bin& D) {
  Bin l = log(4 * D);
  return Bin(60 * n * n) + 7 * n * log2(inv_delta) + log2(l) + log2(log(l));
}

}  // namespace

TEST(Evertse, ReferencePoint) {
  Bin want = Bin(540) + 21 * log2(Bin(10)) + log2(log(Bin(24))) + log2(log(log(Bin(24))));
  BigFloat got = evertse_count_log2(3, Rational(1, 10), Integer(6));
  // Compare at full precision through the decimal text.
  Bin diff = abs(Bin(got.to_string(40)) - want);
  EXPECT_LT(diff, Bin(1e-9));
}

TEST(Evertse, DeltaOneDropsTheDeltaTerm) {
  for (long D : {1L, 2L, 17L, 1000L}) {
    Bin want = evertse_reference(2, Bin(1), Bin(D));
    EXPECT_NEAR(value(evertse_count_log2(2, Rational(1), Integer(D))), static_cast<double>(want), 1e-9);
  }
}

TEST(Evertse, RandomAgainstReference) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (long den : {2L, 3L, 10L, 97L}) {
      for (long D : {1L, 5L, 123456L}) {
        Bin want = evertse_reference(n, Bin(den), Bin(D));
        EXPECT_NEAR(value(evertse_count_log2(n, Rational(1, den), Integer(D))), static_cast<double>(want), 1e-9);
      }
    }
  }
}

TEST(Evertse, TwoPathsAgree) {
  for (long d : {3L, 10L, 100L, 1000000L}) {
    for (Rational delta : {Rational(1, 10), Rational(1, 35), Rational(1)}) {
      double generic = value(evertse_count_log2(3, delta, Integer(2 * d)));
      double special = value(evertse_count_log2_n3(delta, Integer(d)));
      EXPECT_NEAR(generic, special, 1e-9) << d;
    }
  }
}

TEST(Evertse, Errors) {
  EXPECT_THROW(evertse_count_log2(1, Rational(1, 2), Integer(3)), DomainError);
  EXPECT_THROW(evertse_count_log2(3, Rational(0), Integer(3)), DomainError);
  EXPECT_THROW(evertse_count_log2(3, Rational(3, 2), Integer(3)), DomainError);
  EXPECT_THROW(evertse_count_log2(3, Rational(1, 2), Integer(0)), DomainError);
}

TEST(Measure, ReferencePoint) {
  MeasureValue m = measure_w({Rational(1), Integer(3), Integer(2)});
  Bin l3 = log(Bin(3));
  Bin w = exp(l3 * log(l3));
  EXPECT_NEAR(value(m.w), static_cast<double>(w), 1e-12);
  // 1.1087 is what truncated four-digit logs give; the true value is 1.10885.
  EXPECT_NEAR(value(m.w), 1.1087, 2e-4);
  EXPECT_NEAR(value(m.log_bound), static_cast<double>(-w * log(Bin(2))), 1e-12);
  EXPECT_NEAR(value(m.log_bound), -0.7685, 1e-4);
}

TEST(Measure, MonotoneInDegreeAndConstant) {
  BigFloat prev = measure_w({Rational(1), Integer(3), Integer(2)}).w;
  EXPECT_GT(prev, BigFloat(1L));
  for (long d = 4; d <= 1000; ++d) {
    BigFloat w = measure_w({Rational(1), Integer(d), Integer(2)}).w;
    ASSERT_GT(w, prev) << d;
    prev = w;
  }
  BigFloat a = measure_w({Rational(1, 2), Integer(50), Integer(2)}).w;
  BigFloat b = measure_w({Rational(1), Integer(50), Integer(2)}).w;
  BigFloat c = measure_w({Rational(3), Integer(50), Integer(2)}).w;
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(Measure, EarlierMeasureIsLarger) {
  for (long d : {16L, 17L, 100L, 12345L, 1000000L}) {
    EXPECT_GT(measure_w_squared_logs(Rational(1), Integer(d)), measure_w({Rational(1), Integer(d), Integer(2)}).w);
  }
}

TEST(Measure, Errors) {
  EXPECT_THROW(measure_w({Rational(1), Integer(2), Integer(2)}), DomainError);
  EXPECT_THROW(measure_w({Rational(1), Integer(3), Integer(1)}), DomainError);
  EXPECT_THROW(measure_w({Rational(0), Integer(3), Integer(2)}), DomainError);
}

TEST(NaiveHeight, Examples) {
  std::vector<Integer> a{-2, 0, 1};
  EXPECT_EQ(naive_height_and_degree(a), std::make_pair(Integer(2), 2u));
  std::vector<Integer> b{1, -7, 0, 3};
  EXPECT_EQ(naive_height_and_degree(b), std::make_pair(Integer(7), 3u));
  std::vector<Integer> c{0, 1};
  EXPECT_EQ(naive_height_and_degree(c), std::make_pair(Integer(1), 1u));
  std::vector<Integer> z{0, 0};
  EXPECT_THROW(naive_height_and_degree(z), ZeroPolynomial);
}
