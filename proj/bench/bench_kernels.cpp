// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "toughcycle/sweep.hpp"
#include "toughcycle/toughness.hpp"

using namespace toughcycle;

namespace {

Graph bench_graph(int n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  Graph h(n);
  std::bernoulli_distribution edge(0.5);
  for (int v = 1; v < n; ++v) {
    h.add_edge(static_cast<int>(rng() % v), v);
    for (int u = 0; u < v; ++u)
      if (edge(rng)) h.add_edge(u, v);
  }
  return h;
}

void toughness_kernel(benchmark::State& state, ExecPolicy policy) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  CutsetSearchOptions options;
  options.policy = policy;
  for (auto _ : state) benchmark::DoNotOptimize(toughness(g, options));
}

void toughness_reference_kernel(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(toughness_reference(g));
}

void sweep_kernel(benchmark::State& state, ExecPolicy policy) {
  SweepOptions options;
  options.policy = policy;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_sweep(n, 1, Theorem::EdgeCount, options));
}

}  // namespace

BENCHMARK_CAPTURE(toughness_kernel, serial, ExecPolicy::Serial)
    ->Arg(14)->Arg(17)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(toughness_kernel, parallel, ExecPolicy::Parallel)
    ->Arg(14)->Arg(17)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(toughness_reference_kernel)->Arg(14)->Arg(17)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_kernel, serial, ExecPolicy::Serial)
    ->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(sweep_kernel, parallel, ExecPolicy::Parallel)
    ->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();

BENCHMARK_MAIN();
