#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unate/hypercube.hpp"

namespace unate {

/// Dimension guard for the brute-force oracles. Vertex sets are stored as
/// 64-bit masks, so the cap can be raised to at most 6.
struct ExactLimits {
  static constexpr std::size_t kHardCap = 6;
  std::size_t max_dimension = 5;
};

/// lower strictly precedes upper in the b-twisted order (lower xor b is a
/// proper subset of upper xor b) and f(lower) > f(upper).
struct ViolatedPair {
  PointIndex lower = 0;
  PointIndex upper = 0;

  friend bool operator==(const ViolatedPair&, const ViolatedPair&) = default;
};

struct ViolationGraph {
  std::size_t n = 0;
  Orientation orientation;
  std::vector<ViolatedPair> pairs;

  std::size_t vertex_count() const noexcept { return std::size_t{1} << n; }
};

/// All comparable violated pairs, not only hypercube edges.
ViolationGraph violation_graph(const HypercubeFunction& f, const Orientation& b,
                               const ExactLimits& limits = {});

/// Greedy maximal matching, scanning pairs in stored order.
std::vector<ViolatedPair> greedy_maximal_matching(const ViolationGraph& g);

struct VertexCover {
  std::vector<PointIndex> vertices;  ///< ascending
  std::size_t matching_size = 0;     ///< greedy maximal matching on the same graph
};

/// Exact minimum vertex cover by branch and bound.
VertexCover min_vertex_cover(const ViolationGraph& g);

bool covers(const ViolationGraph& g, const std::vector<PointIndex>& cover);

struct DistanceReport {
  std::size_t n = 0;
  std::vector<PointIndex> repair_set;  ///< a minimum set of points to rewrite, ascending
  std::size_t matching_size = 0;       ///< lower bound on |repair_set|
  std::size_t cover_upper_bound = 0;   ///< 2 * matching_size

  std::size_t repair_count() const noexcept { return repair_set.size(); }
  std::uint64_t points() const noexcept { return std::uint64_t{1} << n; }
  Rational distance() const {
    return Rational(static_cast<std::int64_t>(repair_count()), static_cast<std::int64_t>(points()));
  }
};

/// Rewrites f on repair_set: points are visited in increasing twisted order and
/// each rewritten point takes the maximum value among its immediate twisted
/// predecessors, or the global minimum of f when it has none. When repair_set
/// covers violation_graph(f, b) the result is b-monotone.
HypercubeFunction repair(const HypercubeFunction& f, const Orientation& b,
                         const std::vector<PointIndex>& repair_set);

DistanceReport distance_to_b_monotone(const HypercubeFunction& f, const Orientation& b,
                                      const ExactLimits& limits = {});

struct UnateDistance {
  DistanceReport report;
  Orientation orientation;  ///< lexicographically smallest minimizer
};

UnateDistance distance_to_unate(const HypercubeFunction& f, const ExactLimits& limits = {});

struct DimensionReductionReport {
  Rational eps_exact;          ///< distance to b-monotonicity
  std::vector<Rational> mu;    ///< fraction of points violating b in each dimension
  Rational mu_sum;
  bool holds = false;          ///< mu_sum >= eps_exact / 4
  bool holds_half = false;     ///< mu_sum >= eps_exact / 2, tracked only
};

DimensionReductionReport verify_dimension_reduction(const HypercubeFunction& f, const Orientation& b,
                                                    const ExactLimits& limits = {});

}  // namespace unate
