#include <benchmark/benchmark.h>

#include "knotkit/satellite.hpp"

using namespace knotkit;

namespace {

void BM_EntangleHopfTrefoil(benchmark::State& state) {
  const Diagram hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)");
  const AnnularDiagram p = annular_embed(hopf, find_companion_disk(hopf));
  const Diagram k = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  for (auto _ : state) benchmark::DoNotOptimize(entangle(p, k));
}
BENCHMARK(BM_EntangleHopfTrefoil);

void BM_WrappingNumber(benchmark::State& state) {
  const Diagram w = parse_pd("X(6,1,7,2) X(10,7,5,8) X(4,5,1,6) X(2,10,3,9) X(8,4,9,3)");
  const AnnularDiagram a = annular_embed(w, find_companion_disk(w));
  for (auto _ : state) benchmark::DoNotOptimize(wrapping_number(a));
}
BENCHMARK(BM_WrappingNumber);

void BM_Cable(benchmark::State& state) {
  const Diagram f = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
  for (auto _ : state) benchmark::DoNotOptimize(cable(f));
}
BENCHMARK(BM_Cable);

}  // namespace
