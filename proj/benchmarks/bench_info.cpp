#include <benchmark/benchmark.h>

#include "ibcq/info.hpp"
#include "ibcq/instances.hpp"
#include "ibcq/perr.hpp"

using namespace ibcq;

static void BM_WorstRadius(benchmark::State& state) {
  const Design d = optimal_design(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(worst_radius(d, 1.0));
}
BENCHMARK(BM_WorstRadius)->RangeMultiplier(8)->Range(8, 32768);

static void BM_IntervalH(benchmark::State& state) {
  Rng rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Design d = random_design(n, rng);
  const auto f = random_lipschitz_pwl(1.0, n, rng);
  const DataVector y = observe(f, d);
  for (auto _ : state) benchmark::DoNotOptimize(interval_h(envelopes(d, y, 1.0)));
}
BENCHMARK(BM_IntervalH)->RangeMultiplier(8)->Range(8, 32768);

static void BM_Extract(benchmark::State& state) {
  Rng rng(2);
  const PlantedInstance inst = planted_instance(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract(inst.dist, inst.eps).value);
}
BENCHMARK(BM_Extract)->Arg(12)->Arg(256)->Arg(4096);
