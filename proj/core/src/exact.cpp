#include "unate/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <optional>
#include <stdexcept>

#include "unate/errors.hpp"

namespace unate {
namespace {

void check_cap(std::size_t n, const ExactLimits& limits) {
  if (limits.max_dimension > ExactLimits::kHardCap) {
    throw std::invalid_argument("exact-oracle cap cannot exceed " + std::to_string(ExactLimits::kHardCap));
  }
  if (n > limits.max_dimension) {
    throw CapExceeded("exact oracles are limited to n <= " + std::to_string(limits.max_dimension) +
                      ", got n = " + std::to_string(n));
  }
}

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }

// Branch-and-bound minimum vertex cover over at most 64 vertices.
class CoverSolver {
 public:
  explicit CoverSolver(const ViolationGraph& g) : vertices_(g.vertex_count()) {
    adj_.fill(0);
    for (const auto& p : g.pairs) {
      adj_[p.lower] |= bit(p.upper);
      adj_[p.upper] |= bit(p.lower);
    }
  }

  // Returns the best cover of size < limit, if any.
  std::optional<Mask> solve(std::size_t limit) {
    best_size_ = limit;
    best_.reset();
    search(0, 0);
    return best_;
  }

  std::size_t residual_matching(Mask chosen) const {
    Mask matched = 0;
    std::size_t size = 0;
    for (std::size_t u = 0; u < vertices_; ++u) {
      if ((chosen | matched) & bit(u)) continue;
      const Mask avail = adj_[u] & ~chosen & ~matched;
      if (avail != 0) {
        matched |= bit(u) | bit(static_cast<std::size_t>(std::countr_zero(avail)));
        ++size;
      }
    }
    return size;
  }

 private:
  void search(Mask chosen, std::size_t count) {
    std::size_t max_degree = 0;
    std::size_t pick = 0;
    std::optional<std::size_t> leaf;
    for (std::size_t v = 0; v < vertices_; ++v) {
      if (chosen & bit(v)) continue;
      const auto degree = static_cast<std::size_t>(std::popcount(adj_[v] & ~chosen));
      if (degree > max_degree) {
        max_degree = degree;
        pick = v;
      }
      if (degree == 1 && !leaf) leaf = v;
    }
    if (max_degree == 0) {
      if (count < best_size_) {
        best_size_ = count;
        best_ = chosen;
      }
      return;
    }
    if (count + residual_matching(chosen) >= best_size_) return;

    if (leaf) {
      // Some optimal cover contains the neighbour of a degree-one vertex.
      search(chosen | (adj_[*leaf] & ~chosen), count + 1);
      return;
    }
    search(chosen | bit(pick), count + 1);
    const Mask neighbours = adj_[pick] & ~chosen;
    search(chosen | neighbours, count + static_cast<std::size_t>(std::popcount(neighbours)));
  }

  std::size_t vertices_;
  std::array<Mask, 64> adj_{};
  std::size_t best_size_ = 0;
  std::optional<Mask> best_;
};

std::vector<PointIndex> mask_to_points(Mask m) {
  std::vector<PointIndex> out;
  while (m != 0) {
    out.push_back(static_cast<PointIndex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask matching_cover(const std::vector<ViolatedPair>& matching) {
  Mask m = 0;
  for (const auto& p : matching) m |= bit(p.lower) | bit(p.upper);
  return m;
}

// Reverses the low n bits so that ascending order of the result enumerates
// orientations lexicographically on (b_0, b_1, ...).
std::uint64_t reverse_bits(std::uint64_t k, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (has_bit(k, i)) out |= unit_vector(n - 1 - i);
  }
  return out;
}

std::optional<DistanceReport> bounded_distance(const HypercubeFunction& f, const Orientation& b,
                                               const ExactLimits& limits, std::size_t limit) {
  const auto g = violation_graph(f, b, limits);
  const auto matching = greedy_maximal_matching(g);
  DistanceReport report;
  report.n = f.dimension();
  report.matching_size = matching.size();
  report.cover_upper_bound = 2 * matching.size();
  if (matching.size() >= limit) return std::nullopt;

  CoverSolver solver(g);
  // The matching endpoints already form a cover, so searching below that size suffices.
  const std::size_t seed_size = report.cover_upper_bound;
  std::optional<Mask> best = solver.solve(std::min(limit, seed_size));
  if (!best) {
    if (seed_size >= limit) return std::nullopt;
    best = matching_cover(matching);
  }
  report.repair_set = mask_to_points(*best);
  return report;
}

}  // namespace

ViolationGraph violation_graph(const HypercubeFunction& f, const Orientation& b, const ExactLimits& limits) {
  const std::size_t n = f.dimension();
  check_cap(n, limits);
  if (b.dimension() != n) throw std::invalid_argument("orientation dimension mismatch");

  ViolationGraph g;
  g.n = n;
  g.orientation = b;
  const PointIndex full = point_mask(n);
  const PointIndex twist = b.mask();
  for (PointIndex u = 0; u <= full; ++u) {
    const PointIndex free = full & ~u;
    // Nonempty submasks of the free coordinates give the proper supersets of u.
    for (PointIndex s = free; s != 0; s = (s - 1) & free) {
      const PointIndex lower = u ^ twist;
      const PointIndex upper = (u | s) ^ twist;
      if (f(lower) > f(upper)) g.pairs.push_back({lower, upper});
    }
  }
  std::sort(g.pairs.begin(), g.pairs.end(), [](const ViolatedPair& a, const ViolatedPair& c) {
    return a.lower != c.lower ? a.lower < c.lower : a.upper < c.upper;
  });
  return g;
}

std::vector<ViolatedPair> greedy_maximal_matching(const ViolationGraph& g) {
  std::vector<ViolatedPair> matching;
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& p : g.pairs) {
    if (used[p.lower] || used[p.upper]) continue;
    used[p.lower] = used[p.upper] = true;
    matching.push_back(p);
  }
  return matching;
}

VertexCover min_vertex_cover(const ViolationGraph& g) {
  if (g.n > ExactLimits::kHardCap) throw CapExceeded("vertex cover limited to 64 vertices");
  const auto matching = greedy_maximal_matching(g);
  VertexCover result;
  result.matching_size = matching.size();
  CoverSolver solver(g);
  const std::size_t seed_size = 2 * matching.size();
  auto best = solver.solve(seed_size);
  result.vertices = mask_to_points(best ? *best : matching_cover(matching));
  return result;
}

bool covers(const ViolationGraph& g, const std::vector<PointIndex>& cover) {
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : cover) {
    if (v >= in.size()) return false;
    in[v] = true;
  }
  return std::all_of(g.pairs.begin(), g.pairs.end(),
                     [&](const ViolatedPair& p) { return in[p.lower] || in[p.upper]; });
}

HypercubeFunction repair(const HypercubeFunction& f, const Orientation& b,
                         const std::vector<PointIndex>& repair_set) {
  const std::size_t n = f.dimension();
  if (b.dimension() != n) throw std::invalid_argument("orientation dimension mismatch");
  std::vector<bool> rewrite(f.size(), false);
  for (auto x : repair_set) rewrite.at(x) = true;

  const RangeValue floor_value = *std::min_element(f.values().begin(), f.values().end());
  std::vector<RangeValue> out(f.values().begin(), f.values().end());
  const PointIndex twist = b.mask();
  // Ascending twisted index is a linear extension of the twisted order.
  for (PointIndex t = 0; t < f.size(); ++t) {
    const PointIndex x = t ^ twist;
    if (!rewrite[x]) continue;
    RangeValue value = std::numeric_limits<RangeValue>::min();
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!has_bit(t, i)) continue;
      value = std::max(value, out[(t ^ unit_vector(i)) ^ twist]);
      any = true;
    }
    out[x] = any ? value : floor_value;
  }
  return HypercubeFunction(n, std::move(out));
}

DistanceReport distance_to_b_monotone(const HypercubeFunction& f, const Orientation& b,
                                      const ExactLimits& limits) {
  auto report = bounded_distance(f, b, limits, std::numeric_limits<std::size_t>::max());
  return std::move(*report);
}

UnateDistance distance_to_unate(const HypercubeFunction& f, const ExactLimits& limits) {
  const std::size_t n = f.dimension();
  check_cap(n, limits);
  std::optional<UnateDistance> best;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    const Orientation b(n, reverse_bits(k, n));
    const std::size_t limit = best ? best->report.repair_count() : std::numeric_limits<std::size_t>::max();
    if (auto report = bounded_distance(f, b, limits, limit)) {
      best = UnateDistance{std::move(*report), b};
      if (best->report.repair_count() == 0) break;
    }
  }
  return std::move(*best);
}

DimensionReductionReport verify_dimension_reduction(const HypercubeFunction& f, const Orientation& b,
                                                    const ExactLimits& limits) {
  DimensionReductionReport r;
  r.eps_exact = distance_to_b_monotone(f, b, limits).distance();
  r.mu = violation_profile(f).one_sided_violation(b);
  r.mu_sum = Rational(0);
  for (const auto& m : r.mu) r.mu_sum += m;
  r.holds = r.mu_sum >= r.eps_exact / 4;
  r.holds_half = r.mu_sum >= r.eps_exact / 2;
  return r;
}

}  // namespace unate
