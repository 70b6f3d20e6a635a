#include <benchmark/benchmark.h>

#include "ibcq/circuits.hpp"
#include "ibcq/qsim.hpp"

using namespace ibcq;

static void BM_Hadamard(benchmark::State& state) {
  const int nu = static_cast<int>(state.range(0));
  QState s(nu);
  int q = 0;
  for (auto _ : state) {
    apply_gate(s, GateOp::h(q));
    q = (q + 1) % nu;
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << nu));
}
BENCHMARK(BM_Hadamard)->DenseRange(8, 20, 4);

static void BM_ControlledPhase(benchmark::State& state) {
  const int nu = static_cast<int>(state.range(0));
  QState s(nu);
  for (auto _ : state) apply_gate(s, GateOp::cphase(0, nu - 1, 0.3));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << nu));
}
BENCHMARK(BM_ControlledPhase)->DenseRange(8, 20, 4);

static void BM_BitQuery(benchmark::State& state) {
  const int mp = static_cast<int>(state.range(0));
  const QuerySpec q{mp, 4, 0.0, 1.0, TauRule::Midpoint};
  const auto f = FunctionSpec::piecewise_linear({{0, 0}, {0.5, 1}, {1, 0}});
  const QueryTable table = build_query_table(f, q);
  QState s(mp + 4);
  for (auto _ : state) bit_query(s, q, table);
}
BENCHMARK(BM_BitQuery)->DenseRange(4, 16, 4);

static void BM_MidpointExampleRun(benchmark::State& state) {
  const MidpointExample ex = midpoint_example(1.0 / 400.0, 1.0);
  for (auto _ : state) {
    const RunResult r = run(ex.algorithm, ex.family.front().f);
    benchmark::DoNotOptimize(r.state.amplitudes().data());
  }
}
BENCHMARK(BM_MidpointExampleRun)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
