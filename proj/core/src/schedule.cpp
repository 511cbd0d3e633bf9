#include "unate/schedule.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace unate {
namespace {

__extension__ using Wide = unsigned __int128;

Wide ceil_div(Wide a, Wide b) { return (a + b - 1) / b; }

}  // namespace

unsigned round_count(std::size_t n, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Wide p = static_cast<Wide>(eps.numerator());
  const Wide target = Wide{8} * n * static_cast<Wide>(eps.denominator());
  unsigned rounds = 0;
  for (Wide scaled = p; scaled < target; scaled <<= 1) ++rounds;
  return rounds;
}

TesterSchedule build_schedule(std::size_t n, const Rational& eps) {
  if (n < 1 || n > 64) throw std::invalid_argument("tester dimension must be in [1, 64]");
  if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0, 1], got " + to_string(eps));

  TesterSchedule s;
  s.n = n;
  s.eps = eps;
  s.rounds = round_count(n, eps);
  if (s.rounds > 62) throw std::overflow_error("eps too small: round count exceeds 62");

  const Wide p = static_cast<Wide>(eps.numerator());
  const Wide q = static_cast<Wide>(eps.denominator());
  const Wide limit = std::numeric_limits<std::uint64_t>::max();
  Wide total = 0;
  for (unsigned r = 1; r <= s.rounds; ++r) {
    const Wide two_r = Wide{1} << r;
    const Wide reps = ceil_div(Wide{20} * n * q, p * two_r);
    const Wide sample = 3 * two_r;
    if (reps > limit / (2 * sample)) throw std::overflow_error("schedule query count exceeds 64 bits");
    total += 2 * reps * sample;
    if (total > limit) throw std::overflow_error("schedule query count exceeds 64 bits");
    s.plan.push_back({r, static_cast<std::uint64_t>(reps), static_cast<std::uint64_t>(sample)});
  }
  s.total_queries = static_cast<std::uint64_t>(total);
  return s;
}

double schedule_query_bound(std::size_t n, const Rational& eps) {
  const unsigned rounds = round_count(n, eps);
  return 120.0 * static_cast<double>(n) * rounds / to_double(eps) + 6.0 * (std::ldexp(1.0, rounds + 1) - 2.0);
}

}  // namespace unate
