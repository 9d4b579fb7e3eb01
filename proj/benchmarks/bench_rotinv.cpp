#include <benchmark/benchmark.h>

#include "rotinv/rotinv.hpp"

namespace {

using namespace rotinv;

void BM_EvalWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_system(SystemSpec::make(n, 2, 2, 2), 1);
  const auto e = parse_expr("tr(W1 sq(Y1) W2 W1 sq(Y2))");
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, s));
}
BENCHMARK(BM_EvalWord)->Arg(4)->Arg(6)->Arg(10);

void BM_GradWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = random_system(SystemSpec::make(n, 2, 2, 2), 1);
  const auto e = parse_expr("tr(W1 sq(Y1) W2 W1 sq(Y2))");
  for (auto _ : state) benchmark::DoNotOptimize(grad(e, s));
}
BENCHMARK(BM_GradWord)->Arg(4)->Arg(6)->Arg(10);

void BM_GenericRank(benchmark::State& state) {
  const auto spec = SystemSpec::make(static_cast<int>(state.range(0)), 2, 2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(generic_rank(spec));
}
BENCHMARK(BM_GenericRank)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PruneDevice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = candidate_basis(Theorem::Three, n, MetricSignature::euclidean(n));
  const auto systems = sample_systems(c.spec, 20, 0);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_prune(c.exprs, systems));
}
BENCHMARK(BM_PruneDevice)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
