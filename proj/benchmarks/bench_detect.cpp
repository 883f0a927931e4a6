#include "broomlab/construct.hpp"
#include "broomlab/detect.hpp"

#include <benchmark/benchmark.h>

using namespace broomlab;

static void BM_DetectF2Bipartite(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto c = f2_bipartite_coloring(s);
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_broom(c.coloring, {1 << s, 3}));
}
BENCHMARK(BM_DetectF2Bipartite)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_DetectF3Clique(benchmark::State& state) {
  const auto c = f3_clique_coloring(2);
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_broom(c.coloring, {8, 3}));
}
BENCHMARK(BM_DetectF3Clique)->Unit(benchmark::kMillisecond);

// First hit is found quickly when t is one too large.
static void BM_DetectHit(benchmark::State& state) {
  const auto c = f2_clique_coloring(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_broom(c.coloring, {5, 3}));
}
BENCHMARK(BM_DetectHit);
