#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unate/rational.hpp"

namespace unate {

struct RoundPlan {
  unsigned round = 0;              ///< r, 1-based
  std::uint64_t repetitions = 0;   ///< s_r = ceil(20n / (eps 2^r))
  std::uint64_t sample_size = 0;   ///< m_r = 3 * 2^r

  std::uint64_t queries() const noexcept { return 2 * repetitions * sample_size; }
};

struct TesterSchedule {
  std::size_t n = 0;
  Rational eps;
  unsigned rounds = 0;             ///< L = ceil(log2(8n / eps))
  std::vector<RoundPlan> plan;
  std::uint64_t total_queries = 0; ///< accept-path oracle calls: sum_r 2 s_r m_r
};

/// Smallest L >= 0 with 2^L * eps >= 8n, by exact integer comparison. Requires eps > 0.
unsigned round_count(std::size_t n, const Rational& eps);

/// Throws std::invalid_argument unless n in [1, 64] and 0 < eps <= 1, and
/// std::overflow_error when the total query count does not fit in 64 bits.
TesterSchedule build_schedule(std::size_t n, const Rational& eps);

/// 120 n L / eps + 6 (2^(L+1) - 2): the sum of the ceilings bounded term by term.
double schedule_query_bound(std::size_t n, const Rational& eps);

}  // namespace unate
