#include "unate/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "unate/errors.hpp"

namespace unate {

FunctionOracle gen_parity(std::size_t n) {
  return FunctionOracle(
      n, [](PointIndex x) { return static_cast<RangeValue>(std::popcount(x) & 1); },
      "parity n=" + std::to_string(n));
}

FunctionOracle gen_constant(std::size_t n, RangeValue c) {
  return FunctionOracle(
      n, [c](PointIndex) { return c; }, "constant n=" + std::to_string(n) + " c=" + std::to_string(c));
}

FunctionOracle gen_dictator(std::size_t n, std::size_t i, Direction direction) {
  if (i >= n) throw std::invalid_argument("dictator dimension out of range");
  const bool decreasing = direction == Direction::decreasing;
  return FunctionOracle(
      n,
      [i, decreasing](PointIndex x) {
        const RangeValue v = has_bit(x, i) ? 1 : 0;
        return decreasing ? 1 - v : v;
      },
      "dictator n=" + std::to_string(n) + " i=" + std::to_string(i) + (decreasing ? " -" : " +"));
}

std::vector<RangeValue> draw_weights(std::size_t n, std::uint64_t seed, RangeValue max_weight) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<RangeValue> magnitude(1, max_weight);
  std::bernoulli_distribution negative(0.5);
  std::vector<RangeValue> w(n);
  for (auto& wi : w) {
    wi = magnitude(rng);
    if (negative(rng)) wi = -wi;
  }
  return w;
}

FunctionOracle gen_weighted_threshold(std::vector<RangeValue> weights) {
  const std::size_t n = weights.size();
  if (std::find(weights.begin(), weights.end(), 0) != weights.end()) {
    throw std::invalid_argument("weights must be nonzero");
  }
  std::string desc = "weighted-threshold n=" + std::to_string(n);
  return FunctionOracle(
      n,
      [w = std::move(weights)](PointIndex x) {
        RangeValue sum = 0;
        while (x != 0) {
          sum += w[static_cast<std::size_t>(std::countr_zero(x))];
          x &= x - 1;
        }
        return sum;
      },
      std::move(desc));
}

FunctionOracle gen_weighted_threshold(std::size_t n, std::uint64_t seed, RangeValue max_weight) {
  return gen_weighted_threshold(draw_weights(n, seed, max_weight));
}

HypercubeFunction gen_random_table(std::size_t n, std::uint64_t seed, RangeValue lo, RangeValue hi) {
  if (lo > hi) throw std::invalid_argument("random table needs lo <= hi");
  if (n < 1 || n > kMaxTableDimension) throw std::invalid_argument("random table dimension out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<RangeValue> value(lo, hi);
  std::vector<RangeValue> values(std::size_t{1} << n);
  for (auto& v : values) v = value(rng);
  return HypercubeFunction(n, std::move(values));
}

PlantedFar gen_planted_far(std::size_t n, Rational target, std::uint64_t seed, std::size_t budget,
                           RangeValue max_weight, const ExactLimits& limits) {
  if (n > limits.max_dimension) {
    throw CapExceeded("planted-far instances need n <= " + std::to_string(limits.max_dimension));
  }
  if (target < 0 || target > Rational(1, 2)) throw std::invalid_argument("target distance must lie in [0, 1/2]");

  // Separate streams for the seed function and for the perturbations.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto f = tabulate(gen_weighted_threshold(n, seed, max_weight));
  const auto [lo_it, hi_it] = std::minmax_element(f.values().begin(), f.values().end());
  std::uniform_int_distribution<RangeValue> value(*lo_it, *hi_it);
  std::uniform_int_distribution<PointIndex> point(0, f.size() - 1);

  auto distance = distance_to_unate(f, limits);
  std::size_t attempts = 0;
  while (distance.report.distance() < target) {
    if (attempts == budget) {
      throw BudgetExhausted("no instance at distance >= " + to_string(target) + " for n = " +
                            std::to_string(n) + " within " + std::to_string(budget) + " attempts");
    }
    ++attempts;
    f.mutable_values()[point(rng)] = value(rng);
    distance = distance_to_unate(f, limits);
  }
  return PlantedFar{std::move(f), std::move(distance), attempts};
}

}  // namespace unate
