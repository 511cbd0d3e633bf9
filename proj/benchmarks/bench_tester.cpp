#include <benchmark/benchmark.h>

#include "unate/unate.hpp"

namespace {

using namespace unate;

// Accept path: the full schedule runs, so time scales with the query total.
void BM_UnateTestAccept(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto oracle = gen_weighted_threshold(n, 7);
  const Rational eps(1, 4);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto report = unate_test(oracle, eps, seed++);
    benchmark::DoNotOptimize(report.queries);
  }
  state.counters["queries"] = static_cast<double>(build_schedule(n, eps).total_queries);
}
BENCHMARK(BM_UnateTestAccept)->RangeMultiplier(2)->Range(2, 64);

void BM_UnateTestRejectParity(benchmark::State& state) {
  auto oracle = gen_parity(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(unate_test(oracle, Rational(1, 4), seed++).queries);
}
BENCHMARK(BM_UnateTestRejectParity)->Arg(2)->Arg(16)->Arg(64);

void BM_ViolationProfile(benchmark::State& state) {
  const auto f = gen_random_table(static_cast<std::size_t>(state.range(0)), 3, 0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(violation_profile(f).counts(0).up);
}
BENCHMARK(BM_ViolationProfile)->DenseRange(4, 20, 4);

void BM_RejectionProbabilityExact(benchmark::State& state) {
  const auto profile = violation_profile(gen_random_table(static_cast<std::size_t>(state.range(0)), 5, 0, 1));
  for (auto _ : state) benchmark::DoNotOptimize(rejection_probability_exact(profile, Rational(1, 10)).probability);
}
BENCHMARK(BM_RejectionProbabilityExact)->Arg(4)->Arg(12)->Arg(20);

}  // namespace
