#include "unate/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unate {

BucketDecomposition levin_buckets(std::span<const Rational> mu, const Rational& eps) {
  BucketDecomposition out;
  out.eps = eps;
  out.rounds = round_count(mu.size(), eps);
  if (out.rounds > 62) throw std::overflow_error("eps too small for exact bucket arithmetic");
  out.buckets.assign(out.rounds, {});
  out.lhs = Rational(0);
  out.mu_sum = Rational(0);

  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Rational& m = mu[i];
    if (m < 0 || m > 1) throw std::invalid_argument("mu values must lie in [0, 1]");
    out.mu_sum += m;
    if (m == 0) continue;
    // Smallest r with 2^-r < m, i.e. m in (2^-r, 2^-(r-1)].
    unsigned r = 1;
    Rational scale(1, 2);
    while (!(scale < m) && r <= out.rounds) {
      ++r;
      scale /= 2;
    }
    if (r > out.rounds) {
      out.below_floor.push_back(i);
    } else {
      out.buckets[r - 1].push_back(i);
    }
  }
  for (unsigned r = 1; r <= out.rounds; ++r) {
    out.lhs += Rational(static_cast<std::int64_t>(out.buckets[r - 1].size())) / pow2(r);
  }
  out.premise = out.mu_sum >= eps / 4;
  out.conclusion = out.lhs >= eps / 16;
  return out;
}

long double both_sides_hit_probability(long double u, long double d, std::uint64_t m) {
  if (u <= 0 || d <= 0 || m == 0) return 0;
  const long double samples = static_cast<long double>(m);
  const long double hit_up = -std::expm1(samples * std::log1p(-u));
  // P(hit U, miss D) = (1-d)^m (1 - (1 - u/(1-d))^m)
  const long double miss_down = std::exp(samples * std::log1p(-d));
  const long double up_given_miss = -std::expm1(samples * std::log1p(-u / (1 - d)));
  const long double p = hit_up - miss_down * up_given_miss;
  return std::clamp(p, 0.0L, 1.0L);
}

bool RoundProbability::bucket_hits_exceed_five_sixths() const noexcept {
  for (const auto& h : bucket_hits) {
    if (!(h.probability > 5.0L / 6.0L)) return false;
  }
  return true;
}

bool RejectionAnalysis::round_bounds_hold() const noexcept {
  for (const auto& r : rounds) {
    if (!r.bound_holds() || !r.bucket_hits_exceed_five_sixths()) return false;
  }
  return true;
}

RejectionAnalysis rejection_probability_exact(const ViolationProfile& profile, const Rational& eps) {
  const std::size_t n = profile.dimension();
  RejectionAnalysis out;
  out.schedule = build_schedule(n, eps);
  const auto mu = profile.mu();
  out.buckets = levin_buckets(mu, eps);

  long double log_accept = 0;
  for (const auto& plan : out.schedule.plan) {
    RoundProbability rp;
    rp.round = plan.round;
    rp.repetitions = plan.repetitions;
    rp.sample_size = plan.sample_size;
    long double sum = 0;
    std::vector<long double> per_dimension(n);
    for (std::size_t i = 0; i < n; ++i) {
      per_dimension[i] =
          both_sides_hit_probability(profile.up_fraction(i), profile.down_fraction(i), plan.sample_size);
      sum += per_dimension[i];
    }
    rp.p = std::clamp(sum / static_cast<long double>(n), 0.0L, 1.0L);
    const auto& bucket = out.buckets.bucket(plan.round);
    rp.lower_bound = 5.0L / 6.0L * static_cast<long double>(bucket.size()) / static_cast<long double>(n);
    for (auto i : bucket) rp.bucket_hits.push_back({i, per_dimension[i]});
    out.exponent += rp.p * static_cast<long double>(plan.repetitions);
    log_accept += static_cast<long double>(plan.repetitions) * std::log1p(-rp.p);
    out.rounds.push_back(std::move(rp));
  }
  out.probability = std::clamp(-std::expm1(log_accept), 0.0L, 1.0L);
  return out;
}

}  // namespace unate
