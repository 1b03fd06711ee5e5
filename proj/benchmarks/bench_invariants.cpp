#include <benchmark/benchmark.h>

#include "knotkit/invariants.hpp"

using namespace knotkit;

namespace {

// Closed 2-braid sigma^m.
Diagram two_braid(int m) {
  std::vector<Tuple> t;
  for (int i = 0; i < m; ++i) {
    const int a = 2 * i, b = 2 * i + 1, a2 = 2 * ((i + 1) % m), b2 = a2 + 1;
    t.push_back({b, b2, a2, a});
  }
  return Diagram::from_unoriented_tuples(t);
}

void BM_Bracket(benchmark::State& state) {
  const Diagram d = two_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, {.threads = 1}));
}
BENCHMARK(BM_Bracket)->DenseRange(6, 16, 2);

void BM_BracketThreaded(benchmark::State& state) {
  const Diagram d = two_braid(18);
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, {.threads = static_cast<int>(state.range(0))}));
}
BENCHMARK(BM_BracketThreaded)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

}  // namespace
