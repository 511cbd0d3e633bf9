#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "unate/hypercube.hpp"
#include "unate/schedule.hpp"

namespace unate {

/// Dimensions grouped by scale: bucket r (1 <= r <= L) holds the i with
/// mu_i in (2^-r, 2^-(r-1)].
struct BucketDecomposition {
  Rational eps;
  unsigned rounds = 0;                          ///< L for (n, eps)
  std::vector<std::vector<std::size_t>> buckets; ///< buckets[r - 1] = S_r
  std::vector<std::size_t> below_floor;         ///< 0 < mu_i <= 2^-L, in no bucket
  Rational lhs;                                 ///< sum_r |S_r| / 2^r
  Rational mu_sum;
  bool premise = false;                         ///< mu_sum >= eps / 4
  bool conclusion = false;                      ///< lhs >= eps / 16

  /// premise implies conclusion.
  bool implication_holds() const noexcept { return !premise || conclusion; }
  const std::vector<std::size_t>& bucket(unsigned r) const { return buckets.at(r - 1); }
};

/// Requires 0 <= mu_i <= 1 and eps > 0.
BucketDecomposition levin_buckets(std::span<const Rational> mu, const Rational& eps);

/// Probability that m independent uniform points hit both a set of density u
/// and a disjoint set of density d.
long double both_sides_hit_probability(long double u, long double d, std::uint64_t m);

struct BucketHit {
  std::size_t dimension = 0;
  long double probability = 0;  ///< exact per-repetition hit probability at this round
};

struct RoundProbability {
  unsigned round = 0;
  std::uint64_t repetitions = 0;
  std::uint64_t sample_size = 0;
  long double p = 0;              ///< exact rejection probability of one repetition
  long double lower_bound = 0;    ///< (5/6) |S_r| / n
  std::vector<BucketHit> bucket_hits;

  /// p exceeds the bound strictly when S_r is nonempty; equality at zero otherwise.
  bool bound_holds() const noexcept {
    return bucket_hits.empty() ? p >= lower_bound : p > lower_bound;
  }
  /// Every dimension in S_r is hit with probability above 5/6.
  bool bucket_hits_exceed_five_sixths() const noexcept;
};

struct RejectionAnalysis {
  TesterSchedule schedule;
  BucketDecomposition buckets;
  std::vector<RoundProbability> rounds;
  long double probability = 0;  ///< 1 - prod_r (1 - p_r)^{s_r}
  long double exponent = 0;     ///< sum_r p_r s_r; probability >= 1 - exp(-exponent)

  bool round_bounds_hold() const noexcept;
};

/// Exact rejection probability of the tester on the function described by
/// profile, under with-replacement sampling.
RejectionAnalysis rejection_probability_exact(const ViolationProfile& profile, const Rational& eps);

}  // namespace unate
