// Serial reference against the OpenMP kernels. The second argument selects
// the execution mode: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "trisurf/count_table.hpp"
#include "trisurf/eights.hpp"
#include "trisurf/oracle.hpp"
#include "trisurf/sampler.hpp"
#include "trisurf/topology.hpp"

using namespace trisurf;

namespace {

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_Census(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(census(static_cast<int>(s.range(0)), mode(s)));
}
BENCHMARK(BM_Census)->Args({2, 0})->Args({2, 1})->Args({3, 0})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_TableFill(benchmark::State& s) {
  for (auto _ : s) {
    CountTable t(static_cast<int>(s.range(0)), -1, mode(s));
    benchmark::DoNotOptimize(t.tau(t.max_n(), 1));
  }
}
BENCHMARK(BM_TableFill)->Args({64, 0})->Args({64, 1})->Args({128, 0})->Args({128, 1})->Unit(benchmark::kMillisecond);

void BM_Sepsys(benchmark::State& s) {
  const MapTopology t(sample_or_throw(static_cast<int>(s.range(0)), 3, 5));
  for (auto _ : s) benchmark::DoNotOptimize(t.sepsys_search(10, mode(s)));
}
BENCHMARK(BM_Sepsys)->Args({10, 0})->Args({10, 1})->Args({14, 0})->Args({14, 1})->Unit(benchmark::kMillisecond);

void BM_Experiment(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(experiment_sepsys(0.25, {8, 10}, static_cast<int>(s.range(0)), 10, 3, mode(s)));
}
BENCHMARK(BM_Experiment)->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

void BM_FindEights(benchmark::State& s) {
  const MapTopology t(sample_or_throw(10, 3, 9));
  for (auto _ : s) benchmark::DoNotOptimize(find_eights(t, static_cast<int>(s.range(0)), mode(s)));
}
BENCHMARK(BM_FindEights)->Args({6, 0})->Args({6, 1})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
