#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "unate/oracle.hpp"
#include "unate/schedule.hpp"

namespace unate {

using Rng = std::mt19937_64;

/// Dimension i with a point of strictly positive and a point of strictly
/// negative derivative along it.
struct Witness {
  std::size_t dimension = 0;
  PointIndex positive = 0;
  PointIndex negative = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RepetitionResult {
  std::size_t dimension = 0;
  std::optional<Witness> witness;
  std::uint64_t queries = 0;
};

/// One repetition: draw a dimension uniformly, then sample_size points
/// uniformly with replacement, and evaluate the derivative at each point
/// (two oracle calls per point, no deduplication).
RepetitionResult run_round(const FunctionOracle& oracle, std::uint64_t sample_size, Rng& rng);

/// Derivative of an oracle along dimension i at x; costs two queries.
RangeValue oracle_derivative(const FunctionOracle& oracle, std::size_t i, PointIndex x);

/// Re-evaluates both witness points on the given oracle.
bool validate_witness(const FunctionOracle& oracle, const Witness& w);

enum class Verdict { accept, reject };

struct RoundTally {
  unsigned round = 0;
  std::uint64_t repetitions_planned = 0;
  std::uint64_t repetitions_executed = 0;
  std::uint64_t sample_size = 0;
  std::vector<std::uint64_t> dimension_draws;  ///< per dimension, this round
};

struct TesterReport {
  Verdict verdict = Verdict::accept;
  std::optional<Witness> witness;
  std::uint64_t queries = 0;  ///< oracle calls made by this run
  std::uint64_t seed = 0;
  TesterSchedule schedule;
  std::vector<RoundTally> rounds;
};

/// Runs the schedule for (n, eps) in order and stops at the first repetition
/// that observes both derivative signs along its dimension.
TesterReport unate_test(const FunctionOracle& oracle, const Rational& eps, std::uint64_t seed);
TesterReport unate_test(const FunctionOracle& oracle, const TesterSchedule& schedule, Rng& rng,
                        std::uint64_t seed = 0);

/// splitmix64 finalizer: independent per-trial seeds from (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace unate
