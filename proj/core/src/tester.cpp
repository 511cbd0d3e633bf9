#include "unate/tester.hpp"

#include <stdexcept>

namespace unate {

RangeValue oracle_derivative(const FunctionOracle& oracle, std::size_t i, PointIndex x) {
  if (i >= oracle.dimension()) throw std::invalid_argument("dimension out of range");
  const RangeValue lo = oracle.evaluate(x & ~unit_vector(i));
  const RangeValue hi = oracle.evaluate(x | unit_vector(i));
  return hi - lo;
}

RepetitionResult run_round(const FunctionOracle& oracle, std::uint64_t sample_size, Rng& rng) {
  const std::size_t n = oracle.dimension();
  const PointIndex mask = point_mask(n);
  std::uniform_int_distribution<std::size_t> pick_dimension(0, n - 1);

  RepetitionResult result;
  result.dimension = pick_dimension(rng);
  const PointIndex bit = unit_vector(result.dimension);
  std::optional<PointIndex> positive;
  std::optional<PointIndex> negative;
  for (std::uint64_t k = 0; k < sample_size; ++k) {
    const PointIndex x = rng() & mask;
    const RangeValue lo = oracle.evaluate(x & ~bit);
    const RangeValue hi = oracle.evaluate(x | bit);
    result.queries += 2;
    if (hi > lo && !positive) positive = x;
    if (hi < lo && !negative) negative = x;
  }
  if (positive && negative) result.witness = Witness{result.dimension, *positive, *negative};
  return result;
}

bool validate_witness(const FunctionOracle& oracle, const Witness& w) {
  if (w.dimension >= oracle.dimension()) return false;
  if (!point_in_range(w.positive, oracle.dimension()) || !point_in_range(w.negative, oracle.dimension())) {
    return false;
  }
  return oracle_derivative(oracle, w.dimension, w.positive) > 0 &&
         oracle_derivative(oracle, w.dimension, w.negative) < 0;
}

TesterReport unate_test(const FunctionOracle& oracle, const TesterSchedule& schedule, Rng& rng,
                        std::uint64_t seed) {
  if (schedule.n != oracle.dimension()) throw std::invalid_argument("schedule built for a different dimension");
  TesterReport report;
  report.seed = seed;
  report.schedule = schedule;
  for (const auto& round : schedule.plan) {
    RoundTally tally;
    tally.round = round.round;
    tally.repetitions_planned = round.repetitions;
    tally.sample_size = round.sample_size;
    tally.dimension_draws.assign(schedule.n, 0);
    for (std::uint64_t rep = 0; rep < round.repetitions; ++rep) {
      auto result = run_round(oracle, round.sample_size, rng);
      ++tally.repetitions_executed;
      ++tally.dimension_draws[result.dimension];
      report.queries += result.queries;
      if (result.witness) {
        report.verdict = Verdict::reject;
        report.witness = result.witness;
        report.rounds.push_back(std::move(tally));
        return report;
      }
    }
    report.rounds.push_back(std::move(tally));
  }
  report.verdict = Verdict::accept;
  return report;
}

TesterReport unate_test(const FunctionOracle& oracle, const Rational& eps, std::uint64_t seed) {
  const auto schedule = build_schedule(oracle.dimension(), eps);
  Rng rng(seed);
  return unate_test(oracle, schedule, rng, seed);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace unate
