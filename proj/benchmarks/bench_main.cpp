#include <benchmark/benchmark.h>

#include "hyperpath/constructions.hpp"
#include "hyperpath/finder.hpp"
#include "hyperpath/harness.hpp"
#include "hyperpath/oracle.hpp"

using namespace hyperpath;

namespace {

void BM_BuildRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Edge> edges = random_min_degree_graph(n, static_cast<std::size_t>(n + 6), 1).edges();
  for (auto _ : state) {
    benchmark::DoNotOptimize(Hypergraph::build(3, n, edges));
  }
  state.counters["edges"] = static_cast<double>(edges.size());
}
BENCHMARK(BM_BuildRandom)->Arg(23)->Arg(40)->Arg(80);

// Absence proofs are the expensive oracle case: the whole space is searched.
void BM_OracleAbsentStarPlus(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Hypergraph h = gen_star_plus(3, static_cast<int>(state.range(1)), k);
  const auto t = static_cast<std::size_t>(2 * k + 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_path(h, t));
  }
}
BENCHMARK(BM_OracleAbsentStarPlus)->Args({1, 14})->Args({2, 11})->Args({2, 14})->Unit(benchmark::kMillisecond);

void BM_OraclePresentRandom(benchmark::State& state) {
  const Hypergraph h = random_min_degree_graph(23, 29, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_path(h, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_OraclePresentRandom)->Arg(3)->Arg(6);

void BM_FindGuaranteed(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const int n = t == 3 ? 23 : 25;
  const Hypergraph h = random_min_degree_graph(n, static_cast<std::size_t>(theorem_threshold(n, static_cast<std::int64_t>(t)).min_degree), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_guaranteed(h, t));
  }
}
BENCHMARK(BM_FindGuaranteed)->Arg(3)->Arg(4);

void BM_MakeContext(benchmark::State& state) {
  const Hypergraph h = random_min_degree_graph(40, 60, 3);
  const auto path = find_path(h, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_context(h, *path));
  }
}
BENCHMARK(BM_MakeContext)->Arg(4)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
