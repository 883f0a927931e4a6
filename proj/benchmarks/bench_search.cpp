#include "broomlab/detect.hpp"
#include "broomlab/search.hpp"

#include <benchmark/benchmark.h>

using namespace broomlab;

namespace {

SearchConfig clique(int n, int t, bool rules) {
  SearchConfig c;
  c.host_spec = "clique:" + std::to_string(n);
  c.host = parse_host_spec(c.host_spec);
  c.t = t;
  c.rules = rules ? RuleSet{host_qualifies_for_c4(c.host, t), true, false} : RuleSet::none();
  return c;
}

}  // namespace

static void BM_SearchK6(benchmark::State& state) {
  const auto c = clique(6, 4, state.range(0) != 0);
  for (auto _ : state) {
    const auto cert = search(c);
    state.counters["nodes"] = static_cast<double>(cert.stats.nodes);
  }
}
BENCHMARK(BM_SearchK6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_SearchK8Witness(benchmark::State& state) {
  const auto c = clique(8, 6, true);
  for (auto _ : state) benchmark::DoNotOptimize(search(c));
}
BENCHMARK(BM_SearchK8Witness)->Unit(benchmark::kMillisecond);

static void BM_NearFactorizationK9(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(near_factorization_search(build_clique(9), 8));
}
BENCHMARK(BM_NearFactorizationK9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
