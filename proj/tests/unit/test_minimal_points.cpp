#include <gtest/gtest.h>

#include "dioph/errors.hpp"
#include "dioph/geometry.hpp"
#include "dioph/minimal_points.hpp"
#include "dioph/sequence_io.hpp"
#include "dioph/spec_text.hpp"
#include "oracle.hpp"

using namespace dioph;

namespace {

RealSpec fib_xi() { return parse_real_spec("word:fib(1,2)"); }

void expect_same_as_oracle(const std::vector<MinimalPoint>& got, const std::vector<oracle::Point>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    EXPECT_EQ(got[k].index, k + 1);
    EXPECT_EQ(got[k].X, Integer(static_cast<unsigned long>(want[k].x0)));
    EXPECT_EQ(got[k].vec.x1, want[k].x1);
    EXPECT_EQ(got[k].vec.x2, want[k].x2);
  }
}

// delta enclosure scaled to 10^200, floored and ceiled.
bool encloses(const Enclosure& e, const mpz_class& fixed) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 200);
  // The oracle truncates xi and eta, so allow a few units of slack.
  return Rational(e.lo * Rational(scale)) <= Rational(fixed + 4) && Rational(e.hi * Rational(scale)) >= Rational(fixed - 4);
}

}  // namespace

TEST(BestApprox, Examples) {
  RealSpec s2 = parse_real_spec("cf:[1|per(2)]");
  RealSpec two_plus = parse_real_spec("poly:2,1:cf:[1|per(2)]");
  BestApprox b = best_approx_at(Integer(1), s2, two_plus);
  EXPECT_EQ(b.vec, (IntVec3{1, 1, 3}));

  RealSpec inv_golden = parse_real_spec("cf:[0|per(1)]");
  EXPECT_EQ(best_approx_at(Integer(5), inv_golden, inv_golden).vec.x1, 3);

  RealSpec half = parse_real_spec("rat:1/2");
  BestApprox h = best_approx_at(Integer(1), half, half);
  EXPECT_EQ(h.vec.x1, 0);
  EXPECT_EQ(h.delta.lo, Rational(1, 2));
  EXPECT_THROW(best_approx_at(Integer(0), half, half), DomainError);
}

TEST(BestApprox, StreamBasedSqrtTwo) {
  // Same numbers without the periodic shortcut: a generator-backed stream.
  RealSpec s2 = RealSpec::continued_fraction(
      QuotientStream::with_tail({Integer(1)}, [](std::size_t n) { return std::vector<Integer>(n, Integer(2)); }));
  BestApprox b = best_approx_at(Integer(12), s2, RealSpec::square(s2));
  EXPECT_EQ(b.vec, (IntVec3{12, 17, 24}));
}

TEST(Sequence, MatchesOracleOnFibonacciRun) {
  auto got = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 10000);
  auto bf = oracle::BruteForce::square_of_cf(oracle::fibonacci_cf(1, 2));
  auto want = bf.minimal_points(10000);
  expect_same_as_oracle(got, want);
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_TRUE(encloses(got[k].delta, want[k].delta)) << k;
}

TEST(Sequence, MatchesOracleOnSturmianRun) {
  // Slope [0; 1, 2, 1, 2, ...] on letters (1, 3); the oracle gets its
  // quotients from the cutting sequence instead of the standard sequences.
  std::vector<unsigned> slope;
  for (int k = 0; k < 600; ++k) slope.push_back(k % 2 == 0 ? 1 : 2);
  std::vector<unsigned long> cf{0};
  for (unsigned l : oracle::cutting_sequence(slope, 1, 3, 999)) cf.push_back(l);
  RealSpec xi = parse_real_spec("word:sturm([0|per(1,2)],1,3)");
  auto got = minimal_point_sequence(xi, RealSpec::square(xi), 10000);
  expect_same_as_oracle(got, oracle::BruteForce::square_of_cf(cf).minimal_points(10000));
}

TEST(Sequence, MinimalityAgainstOracle) {
  auto got = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 10000);
  auto bf = oracle::BruteForce::square_of_cf(oracle::fibonacci_cf(1, 2));
  std::size_t k = 0;
  for (std::uint64_t x0 = 1; x0 <= 10000; ++x0) {
    while (k + 1 < got.size() && got[k + 1].X <= Integer(static_cast<unsigned long>(x0))) ++k;
    mpz_class d = bf.at(x0).delta;
    ASSERT_TRUE(encloses(got[k].delta, bf.at(to_u64(got[k].X)).delta));
    // delta(x0) >= Delta_k whenever X_k <= x0 < X_{k+1}
    ASSERT_GE(d + 4, bf.at(to_u64(got[k].X)).delta) << x0;
  }
}

TEST(Sequence, Invariants) {
  auto seq = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 100000);
  ASSERT_GE(seq.size(), 3u);
  EXPECT_EQ(seq.front().X, 1);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    EXPECT_TRUE(is_primitive(seq[k].vec));
    EXPECT_LE(seq[k].delta.hi * seq[k].delta.hi * Rational(seq[k].X), 1);
    if (k > 0) {
      EXPECT_LT(seq[k - 1].X, seq[k].X);
      EXPECT_LT(seq[k].delta.hi, seq[k - 1].delta.lo);
      // consecutive raw wedges are primitive
      EXPECT_TRUE(is_primitive(wedge(seq[k - 1].vec, seq[k].vec)));
    }
  }
}

TEST(Sequence, RationalStopsAtCommonDenominator) {
  auto seq = minimal_point_sequence(parse_real_spec("rat:1/3"), parse_real_spec("rat:2/3"), 1000);
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq.back().X, 3);
  EXPECT_EQ(seq.back().delta.hi, 0);
  auto seq2 = minimal_point_sequence(parse_real_spec("rat:2/5"), parse_real_spec("rat:1/7"), 1000);
  EXPECT_EQ(seq2.back().X, 35);
  EXPECT_EQ(seq2.back().delta.hi, 0);
}

TEST(Sequence, HorizonOne) {
  auto seq = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 1);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq[0].X, 1);
  EXPECT_THROW(minimal_point_sequence(fib_xi(), fib_xi(), 0), DomainError);
}

TEST(Sequence, QuadraticTiesAreNotRecords) {
  // xi = sqrt 2 - 1 and eta = xi^2 = 1 - 2 xi: delta(4) equals delta(2) exactly.
  RealSpec xi = parse_real_spec("word:per(2)");
  auto seq = minimal_point_sequence(xi, RealSpec::square(xi), 1000);
  std::vector<unsigned long> want{1, 2, 5, 12, 29, 70, 169, 408, 985};
  ASSERT_EQ(seq.size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(seq[k].X, Integer(want[k]));
}

TEST(Sequence, ThreadCountDoesNotChangeOutput) {
  auto base = sequence_csv(minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 200000));
  for (unsigned t : {2u, 3u, 4u, 8u}) {
    SweepOptions opts;
    opts.threads = t;
    EXPECT_EQ(sequence_csv(minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 200000, opts)), base) << t;
  }
  RealSpec per = parse_real_spec("word:per(1,2)");
  SweepOptions eight;
  eight.threads = 8;
  EXPECT_EQ(sequence_csv(minimal_point_sequence(per, RealSpec::square(per), 50000, eight)),
            sequence_csv(minimal_point_sequence(per, RealSpec::square(per), 50000)));
}

TEST(Sequence, PrecisionExhaustedCarriesX0) {
  SweepOptions tight;
  tight.initial_depth = 4;
  tight.max_depth = 6;
  try {
    minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 100000, tight);
    FAIL() << "expected PrecisionExhausted";
  } catch (const PrecisionExhausted& e) {
    EXPECT_GT(e.x0(), 0u);
  }
  ApproxOptions shallow{2, 2};
  EXPECT_THROW(best_approx_at(Integer(1000003), fib_xi(), fib_xi(), shallow), PrecisionExhausted);
}

TEST(DeltaFunction, Steps) {
  auto seq = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 10000);
  DeltaFunction df(seq, Integer(10000));
  EXPECT_EQ(delta_at(df, Rational(seq[2].X)), seq[2].delta);
  ASSERT_GT(seq[3].X, seq[2].X + 1);
  EXPECT_EQ(delta_at(df, Rational(seq[2].X) + Rational(1, 2)), seq[2].delta);
  EXPECT_EQ(delta_at(df, Rational(1)), seq[0].delta);
  EXPECT_EQ(delta_at(df, Rational(10000)), seq.back().delta);
  EXPECT_THROW(delta_at(df, Rational(10001)), HorizonExceeded);
  EXPECT_THROW(delta_at(df, Rational(1, 2)), HorizonExceeded);
}

TEST(FindI0, Examples) {
  auto seq = minimal_point_sequence(fib_xi(), RealSpec::square(fib_xi()), 1000000);
  auto half = find_i0(seq, Rational(1, 2));
  ASSERT_TRUE(half.has_value());
  EXPECT_LE(*half, 5u);
  EXPECT_GE(*half, 2u);
  // Direct check of the definition at and after i0.
  for (std::size_t i = *half; i + 1 <= seq.size() - 1; ++i) {
    const Rational& d = seq[i - 1].delta.hi;
    EXPECT_LE(d * d * Rational(seq[i].X), 1);
  }
  EXPECT_FALSE(find_i0(seq, Rational(99, 100)).has_value());
  std::vector<MinimalPoint> two(seq.begin(), seq.begin() + 2);
  EXPECT_FALSE(find_i0(two, Rational(1, 2)).has_value());
}
