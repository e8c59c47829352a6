#include <benchmark/benchmark.h>

#include "dioph/analysis.hpp"
#include "dioph/bounds.hpp"
#include "dioph/geometry.hpp"
#include "dioph/minimal_points.hpp"
#include "dioph/spec_text.hpp"

using namespace dioph;

static void BM_Sweep(benchmark::State& state) {
  RealSpec xi = parse_real_spec("word:fib(1,2)");
  RealSpec eta = RealSpec::square(xi);
  SweepOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto seq = minimal_point_sequence(xi, eta, static_cast<std::uint64_t>(state.range(0)), opts);
    benchmark::DoNotOptimize(seq.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Args({10000, 1})->Args({1000000, 1})->Args({1000000, 4})->Unit(benchmark::kMillisecond);

static void BM_Enclose(benchmark::State& state) {
  RealSpec xi = parse_real_spec("word:fib(1,2)");
  RealSpec sq = RealSpec::square(xi);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enclose(sq, depth));
}
BENCHMARK(BM_Enclose)->Arg(64)->Arg(256)->Arg(1024);

static void BM_BestApprox(benchmark::State& state) {
  RealSpec xi = parse_real_spec("word:fib(1,2)");
  RealSpec eta = RealSpec::square(xi);
  Integer x0(81788);
  for (auto _ : state) benchmark::DoNotOptimize(best_approx_at(x0, xi, eta));
}
BENCHMARK(BM_BestApprox);

static void BM_WedgeAndBasis(benchmark::State& state) {
  IntVec3 a{Integer(81212), Integer(58510), Integer(42155)};
  IntVec3 b{Integer(81788), Integer(58925), Integer(42454)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedge(a, b));
    benchmark::DoNotOptimize(is_lattice_basis(a, b));
  }
}
BENCHMARK(BM_WedgeAndBasis);

static void BM_Lemmas(benchmark::State& state) {
  RealSpec xi = parse_real_spec("word:fib(1,2)");
  auto seq = minimal_point_sequence(xi, RealSpec::square(xi), 1000000);
  auto I = index_set_I(seq);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_lemma_W(seq));
    benchmark::DoNotOptimize(verify_lemma_X(seq, I));
    benchmark::DoNotOptimize(verify_lemma_main(seq, I, Rational(3, 5), Rational(41, 20)));
  }
}
BENCHMARK(BM_Lemmas);

static void BM_Evertse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evertse_count_log2(3, Rational(1, 10), Integer(6)));
}
BENCHMARK(BM_Evertse);
BENCHMARK_MAIN();
