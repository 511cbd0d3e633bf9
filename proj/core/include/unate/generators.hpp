#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unate/exact.hpp"
#include "unate/hypercube.hpp"
#include "unate/oracle.hpp"

namespace unate {

enum class Direction { increasing, decreasing };

/// popcount(x) mod 2.
FunctionOracle gen_parity(std::size_t n);
FunctionOracle gen_constant(std::size_t n, RangeValue c);
/// x_i, or 1 - x_i when decreasing.
FunctionOracle gen_dictator(std::size_t n, std::size_t i, Direction direction);

/// Nonzero integer weights drawn uniformly from [-max_weight, max_weight] \ {0}.
std::vector<RangeValue> draw_weights(std::size_t n, std::uint64_t seed, RangeValue max_weight = 8);

/// f(x) = sum_i w_i x_i. b-monotone for b_i = [w_i < 0].
FunctionOracle gen_weighted_threshold(std::vector<RangeValue> weights);
FunctionOracle gen_weighted_threshold(std::size_t n, std::uint64_t seed, RangeValue max_weight = 8);

/// Uniform values in [lo, hi] at every point.
HypercubeFunction gen_random_table(std::size_t n, std::uint64_t seed, RangeValue lo, RangeValue hi);

struct PlantedFar {
  HypercubeFunction function;
  UnateDistance distance;
  std::size_t attempts = 0;  ///< perturbation steps taken
};

/// Starts from a weighted-threshold function with weights in [-max_weight,
/// max_weight] and rewrites one uniformly random point per attempt with a
/// uniform value from the seed function's range, returning the first iterate
/// whose exact distance to unateness reaches target. Throws BudgetExhausted
/// after budget attempts.
PlantedFar gen_planted_far(std::size_t n, Rational target, std::uint64_t seed, std::size_t budget,
                           RangeValue max_weight = 1, const ExactLimits& limits = {});

}  // namespace unate
