#include <benchmark/benchmark.h>

#include "symq/constructors.hpp"
#include "symq/good_involutions.hpp"

using namespace symq;

namespace {

void BM_BruteLinear(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  long long k = state.range(1);
  Quandle q = linear_quandle(n, k);
  EnumerateOptions opts;
  opts.collect_mappings = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_brute(q, opts, n).count);
}
BENCHMARK(BM_BruteLinear)->Args({8, 5})->Args({12, 5})->Args({12, 7});

void BM_TheoremLinear(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  long long k = state.range(1);
  TwistedConjContext ctx = linear_context(n, k);
  EnumerateOptions opts;
  opts.collect_mappings = false;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_theorem(ctx, opts).count);
}
BENCHMARK(BM_TheoremLinear)
    ->Args({8, 5})
    ->Args({12, 5})
    ->Args({12, 7})
    ->Args({16, 9})
    ->Args({20, 11});

void BM_ContextBuild(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(linear_context(n, n - 1).quandle.order());
}
BENCHMARK(BM_ContextBuild)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
