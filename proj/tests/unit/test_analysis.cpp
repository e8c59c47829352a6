#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dioph/analysis.hpp"
#include "dioph/errors.hpp"
#include "dioph/spec_text.hpp"
#include "oracle.hpp"

using namespace dioph;
using Dec = boost::multiprecision::cpp_dec_float_100;

namespace {

const std::vector<MinimalPoint>& fib_run() {
  static const std::vector<MinimalPoint> seq = [] {
    RealSpec xi = parse_real_spec("word:fib(1,2)");
    return minimal_point_sequence(xi, RealSpec::square(xi), 1000000);
  }();
  return seq;
}

std::vector<MinimalPoint> points(std::initializer_list<IntVec3> vecs) {
  std::vector<MinimalPoint> out;
  for (const IntVec3& x : vecs) out.push_back(MinimalPoint{out.size() + 1, x, x.x0, Enclosure{}});
  return out;
}

IntVec3 v(long a, long b, long c) { return IntVec3{Integer(a), Integer(b), Integer(c)}; }

std::string detail(const LemmaReport& r, const std::string& key) {
  for (const auto& [k, val] : r.details)
    if (k == key) return val;
  return "<missing>";
}

Dec dec(const Rational& q) { return Dec(q.get_num().get_str()) / Dec(q.get_den().get_str()); }

}  // namespace

TEST(EstimateLambda, FibonacciTailNearInverseGolden) {
  const auto& seq = fib_run();
  auto from = first_index_with_next_at_least(seq, Integer(1000));
  ASSERT_TRUE(from.has_value());
  ExponentEstimate est = estimate_lambda(seq, *from);
  EXPECT_GE(est.tail_min, 0.58);
  EXPECT_LE(est.tail_min, 0.66);
  EXPECT_EQ(est.per_index.size(), seq.size() - 1);
}

TEST(EstimateLambda, BracketsDecimalOracle) {
  const auto& seq = fib_run();
  ExponentEstimate est = estimate_lambda(seq, 1);
  for (const LambdaHat& h : est.per_index) {
    if (h.X_next == 1) continue;
    // Any value inside the delta enclosure gives a lambda inside [lo, hi].
    for (const Rational& d : {seq[h.index - 1].delta.lo, seq[h.index - 1].delta.hi}) {
      Dec lam = -log(dec(d)) / log(Dec(h.X_next.get_str()));
      EXPECT_LE(Dec(h.lo), lam + Dec(1e-15));
      EXPECT_GE(Dec(h.hi), lam - Dec(1e-15));
    }
    EXPECT_LE(h.hi - h.lo, 1e-6);
  }
}

TEST(EstimateLambda, QuadraticControlNearOne) {
  RealSpec xi = parse_real_spec("word:per(2)");
  auto seq = minimal_point_sequence(xi, RealSpec::square(xi), 1000000);
  auto from = first_index_with_next_at_least(seq, Integer(1000));
  ExponentEstimate est = estimate_lambda(seq, *from);
  EXPECT_GE(est.tail_min, 0.9);
  EXPECT_LE(est.tail_min, 1.1);
}

TEST(EstimateLambda, TwoPointsAndErrors) {
  std::vector<MinimalPoint> two(fib_run().begin() + 3, fib_run().begin() + 5);
  ExponentEstimate est = estimate_lambda(two, 1);
  ASSERT_EQ(est.per_index.size(), 1u);
  EXPECT_EQ(est.tail_min, est.per_index[0].lo);
  EXPECT_THROW(estimate_lambda(two, 2), InsufficientData);
  auto rational = minimal_point_sequence(parse_real_spec("rat:1/3"), parse_real_spec("rat:2/3"), 10);
  rational.push_back(rational.back());
  EXPECT_THROW(estimate_lambda(rational, 1), DegenerateDelta);
}

TEST(LemmaW, HoldsOnFibonacciAndAgreesWithSmith) {
  const auto& seq = fib_run();
  LemmaReport r = verify_lemma_W(seq);
  EXPECT_EQ(r.verdict, Verdict::HoldsOnHorizon);
  ASSERT_EQ(r.margins.size(), seq.size() - 1);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    const auto& a = seq[k].vec;
    const auto& b = seq[k + 1].vec;
    long long m[2][3] = {{a.x0.get_si(), a.x1.get_si(), a.x2.get_si()}, {b.x0.get_si(), b.x1.get_si(), b.x2.get_si()}};
    auto [d1, d2] = oracle::smith_2x3(m);
    EXPECT_EQ(r.margins[k].holds, d1 == 1 && d2 == 1);
  }
}

TEST(LemmaW, ConstructedFailures) {
  LemmaReport dim = verify_lemma_W(points({v(1, 0, 0), v(1, 2, 3), v(2, 4, 6)}));
  EXPECT_EQ(dim.verdict, Verdict::Violated);
  EXPECT_EQ(dim.witness, 2u);
  EXPECT_NE(dim.reason.find("dimension"), std::string::npos);
  LemmaReport basis = verify_lemma_W(points({v(1, 0, 0), v(1, 2, 0)}));
  EXPECT_EQ(basis.verdict, Verdict::Violated);
  EXPECT_NE(basis.reason.find("basis"), std::string::npos);
  EXPECT_EQ(verify_lemma_W(points({v(1, 0, 0), v(0, 1, 0)})).verdict, Verdict::HoldsOnHorizon);
}

TEST(LemmaX, HoldsOnFibonacci) {
  const auto& seq = fib_run();
  auto I = index_set_I(seq);
  LemmaReport r = verify_lemma_X(seq, I);
  EXPECT_EQ(r.verdict, Verdict::HoldsOnHorizon);
  EXPECT_EQ(detail(r, "I_size"), std::to_string(I.size()));
  // Recompute the inequality from raw wedges.
  for (std::size_t k = 0; k + 1 < I.size(); ++k) {
    std::size_t i = I[k], j = I[k + 1];
    Integer hi = norm_sq(wedge(seq[i - 1].vec, seq[i].vec));
    Integer hj = norm_sq(wedge(seq[j - 1].vec, seq[j].vec));
    EXPECT_LE(seq[j - 1].X * seq[j - 1].X, hi * hj);
  }
}

TEST(LemmaX, ConstructedFailures) {
  // x2 .. x5 lie in the plane x2 = 0, so W_2 and W_4 coincide.
  auto seq = points({v(1, 0, 1), v(1, 1, 0), v(2, 1, 0), v(3, 1, 0), v(4, 3, 0), v(5, 0, 7)});
  std::vector<std::size_t> I{2, 4};
  LemmaReport r = verify_lemma_X(seq, I);
  EXPECT_EQ(r.verdict, Verdict::Violated);
  EXPECT_EQ(r.reason, "W_i = W_j");
  std::vector<std::size_t> one{2};
  EXPECT_THROW(verify_lemma_X(seq, one), InsufficientData);
}

TEST(LemmaF, ParabolaRun) {
  const auto& seq = fib_run();
  LemmaReport r = verify_lemma_f(seq, parabola_form(), Rational(3, 5));
  EXPECT_EQ(r.verdict, Verdict::HoldsOnHorizon);
  EXPECT_EQ(detail(r, "vanishing_indices"), "1");
  EXPECT_EQ(detail(r, "nonvanishing_from"), "2");
  LemmaReport weaker = verify_lemma_f(seq, parabola_form(), Rational(1, 2));
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    EXPECT_LE(*weaker.margins[k].approx, *r.margins[k].approx);
  }
}

TEST(LemmaF, VanishingFlags) {
  auto seq = points({v(1, 1, 1), v(2, 3, 5), v(3, 6, 12), v(4, 2, 1)});
  LemmaReport r = verify_lemma_f(seq, parabola_form(), Rational(3, 5));
  EXPECT_EQ(r.margins[0].lhs, "0/1");
  EXPECT_EQ(r.verdict, Verdict::Violated);
  EXPECT_EQ(r.witness, 3u);
  auto once = points({v(1, 1, 1), v(2, 3, 5)});
  EXPECT_EQ(verify_lemma_f(once, parabola_form(), Rational(3, 5)).verdict, Verdict::HoldsOnHorizon);
}

TEST(LemmaMain, FibonacciRun) {
  const auto& seq = fib_run();
  auto I = index_set_I(seq);
  LemmaReport r = verify_lemma_main(seq, I, Rational(3, 5), Rational(41, 20));
  EXPECT_EQ(r.verdict, Verdict::HoldsOnHorizon);
  EXPECT_NE(detail(r, "i1"), "<missing>");
  EXPECT_EQ(detail(r, "critical_theta"), "2/1");
  EXPECT_THROW(verify_lemma_main(seq, I, Rational(3, 5), Rational(1, 2)), ThetaTooSmall);
  EXPECT_THROW(verify_lemma_main(seq, I, Rational(3, 5), Rational(2)), ThetaTooSmall);
  EXPECT_THROW(verify_lemma_main(seq, I, Rational(1, 2), Rational(3)), BadLambda);
  std::vector<std::size_t> one{I.front()};
  LemmaReport lone = verify_lemma_main(seq, one, Rational(3, 5), Rational(41, 20));
  EXPECT_EQ(lone.verdict, Verdict::Inconclusive);
}

TEST(Dirichlet, NoViolationsOnIrrationalRuns) {
  EXPECT_EQ(verify_dirichlet(fib_run()).verdict, Verdict::HoldsOnHorizon);
  for (const char* spec : {"word:per(2)", "word:per(1,3)", "word:sturm([0;2|fib(1,2)],1,2)"}) {
    RealSpec xi = parse_real_spec(spec);
    EXPECT_EQ(verify_dirichlet(minimal_point_sequence(xi, RealSpec::square(xi), 100000)).verdict,
              Verdict::HoldsOnHorizon)
        << spec;
  }
}

TEST(Theta, Values) {
  EXPECT_EQ(critical_theta(Rational(3, 5)), 2);
  EXPECT_EQ(auto_theta(Rational(3, 5)), Rational(21, 10));
  EXPECT_EQ(choose_delta(Rational(3, 5)), Rational(1, 35));
  EXPECT_EQ(choose_delta(Rational(309, 500)), Rational(59, 1750));
  EXPECT_THROW(choose_delta(Rational(1, 2)), BadLambda);
  for (int k = 1; k < 50; ++k) {
    Rational lam = Rational(1, 2) + make_rational(Integer(k), Integer(100));
    Rational d = choose_delta(lam);
    EXPECT_LT(6 * d, 2 * lam - 1);
    EXPECT_LT(d, Rational(1, 2));
  }
}
