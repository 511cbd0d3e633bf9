#include <benchmark/benchmark.h>

#include "unate/unate.hpp"

namespace {

using namespace unate;

void BM_MinVertexCover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = gen_random_table(n, 11, 0, 2);
  const auto g = violation_graph(f, Orientation(n, 0));
  for (auto _ : state) benchmark::DoNotOptimize(min_vertex_cover(g).vertices.size());
  state.counters["edges"] = static_cast<double>(g.pairs.size());
}
BENCHMARK(BM_MinVertexCover)->DenseRange(3, 5);

void BM_DistanceToUnate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = gen_random_table(n, 13, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_unate(f).report.repair_count());
}
BENCHMARK(BM_DistanceToUnate)->DenseRange(3, 5);

void BM_PlantedFar(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_planted_far(4, Rational(1, 8), seed++, 10000).attempts);
}
BENCHMARK(BM_PlantedFar);

}  // namespace
