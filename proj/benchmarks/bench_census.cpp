#include <benchmark/benchmark.h>

#include "knotkit/census.hpp"

using namespace knotkit;

namespace {

void BM_RootedMaps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_maps(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RootedMaps)->DenseRange(3, 6);

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_diagrams(n));
}
BENCHMARK(BM_Census)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
