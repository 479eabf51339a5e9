#include <benchmark/benchmark.h>

#include "depra/mc_oracle.hpp"

namespace {

// Two redundant contacts behind an OR with a power supply, at rates high
// enough that every replication sees many transitions.
depra::FlatTree bench_tree() {
  depra::FaultTreeModel m;
  m.basic_events = {{"a", "", 1e6, 24.0}, {"b", "", 1e6, 24.0}, {"ps", "", 2e5, 8.0}};
  m.gates = {{"pair", depra::GateKind::and_gate, {"a", "b"}},
             {"top", depra::GateKind::or_gate, {"pair", "ps"}}};
  m.top = "top";
  return depra::flatten(m);
}

void BM_simulate_serial(benchmark::State& state) {
  const auto tree = bench_tree();
  const depra::SimOptions options{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(depra::simulate_serial(tree, 1e6, 7, options));
}

void BM_simulate_openmp(benchmark::State& state) {
  const auto tree = bench_tree();
  const depra::SimOptions options{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(depra::simulate(tree, 1e6, 7, options));
}

BENCHMARK(BM_simulate_serial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simulate_openmp)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
