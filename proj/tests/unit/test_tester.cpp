#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "unate/analysis.hpp"
#include "unate/generators.hpp"
#include "unate/schedule.hpp"
#include "unate/tester.hpp"

namespace unate {
namespace {

std::vector<std::uint64_t> repetitions(const TesterSchedule& s) {
  std::vector<std::uint64_t> out;
  for (const auto& r : s.plan) out.push_back(r.repetitions);
  return out;
}

TEST(Schedule, SmallExamples) {
  const auto s = build_schedule(2, Rational(1, 4));
  EXPECT_EQ(s.rounds, 6U);
  EXPECT_EQ(repetitions(s), (std::vector<std::uint64_t>{80, 40, 20, 10, 5, 3}));
  std::vector<std::uint64_t> samples;
  for (const auto& r : s.plan) samples.push_back(r.sample_size);
  EXPECT_EQ(samples, (std::vector<std::uint64_t>{6, 12, 24, 48, 96, 192}));
  EXPECT_EQ(s.total_queries, 5952U);

  const auto t = build_schedule(1, Rational(1));
  EXPECT_EQ(t.rounds, 3U);
  EXPECT_EQ(repetitions(t), (std::vector<std::uint64_t>{10, 5, 3}));
}

TEST(Schedule, AgreesWithIntegerOracle) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 1}, {1, 2}, {1, 3}, {2, 7}, {1, 10}, {3, 100}}) {
      const auto s = build_schedule(n, Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)));
      const unsigned L = brute::rounds(n, p, q);
      ASSERT_EQ(s.rounds, L);
      // 2^L eps >= 8n > 2^(L-1) eps
      EXPECT_GE((std::uint64_t{1} << L) * p, 8 * n * q);
      EXPECT_LT((std::uint64_t{1} << (L - 1)) * p, 8 * n * q);
      std::uint64_t total = 0;
      for (unsigned r = 1; r <= L; ++r) {
        const std::uint64_t den = p << r;
        const std::uint64_t reps = (20 * n * q + den - 1) / den;
        EXPECT_EQ(s.plan[r - 1].repetitions, reps);
        EXPECT_GE(reps, 1U);
        EXPECT_EQ(s.plan[r - 1].sample_size, 3U << r);
        total += 2 * reps * (3U << r);
      }
      EXPECT_EQ(s.total_queries, total);
      EXPECT_LE(static_cast<double>(s.total_queries), schedule_query_bound(n, s.eps));
    }
  }
}

TEST(Schedule, RejectsBadEps) {
  EXPECT_THROW(build_schedule(2, Rational(0)), std::invalid_argument);
  EXPECT_THROW(build_schedule(2, Rational(3, 2)), std::invalid_argument);
  EXPECT_THROW(build_schedule(2, Rational(-1, 2)), std::invalid_argument);
  EXPECT_THROW(build_schedule(0, Rational(1)), std::invalid_argument);
  EXPECT_THROW(build_schedule(64, Rational(1, INT64_MAX)), std::overflow_error);
}

TEST(RunRound, MonotoneNeverYieldsWitness) {
  const auto o = gen_weighted_threshold({1, 2, 3, 4, 5});
  Rng rng(1);
  for (int k = 0; k < 2000; ++k) {
    const auto r = run_round(o, 24, rng);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_EQ(r.queries, 48U);
  }
  EXPECT_EQ(o.query_count(), 2000U * 48U);
}

TEST(RunRound, ParityWitnessRateMatchesExactValue) {
  const auto o = gen_parity(2);
  Rng rng(2024);
  constexpr int trials = 20000;
  int hits = 0;
  for (int k = 0; k < trials; ++k) {
    const auto r = run_round(o, 6, rng);
    if (r.witness) {
      ++hits;
      EXPECT_TRUE(validate_witness(o.fork(), *r.witness));
    }
  }
  const double p = 31.0 / 32.0;
  EXPECT_NEAR(static_cast<double>(hits) / trials, p, 4 * std::sqrt(p * (1 - p) / trials));
}

TEST(RunRound, DimensionsAreUniform) {
  const auto o = gen_constant(4, 0);
  Rng rng(8);
  std::vector<int> draws(4, 0);
  constexpr int trials = 40000;
  for (int k = 0; k < trials; ++k) ++draws[run_round(o, 1, rng).dimension];
  for (int d : draws) EXPECT_NEAR(d, trials / 4, 4 * std::sqrt(trials * 0.25 * 0.75));
}

TEST(UnateTest, AcceptsUnateFunctionsWithFullScheduleCost) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto o = gen_weighted_threshold(n, seed);
    const auto report = unate_test(o, Rational(1, 4), seed);
    EXPECT_EQ(report.verdict, Verdict::accept);
    EXPECT_FALSE(report.witness.has_value());
    EXPECT_EQ(report.queries, build_schedule(n, Rational(1, 4)).total_queries);
    EXPECT_EQ(report.queries, o.query_count());
    std::uint64_t draws = 0;
    for (const auto& r : report.rounds) {
      EXPECT_EQ(r.repetitions_executed, r.repetitions_planned);
      for (auto d : r.dimension_draws) draws += d;
    }
    std::uint64_t planned = 0;
    for (const auto& r : report.schedule.plan) planned += r.repetitions;
    EXPECT_EQ(draws, planned);
  }
}

TEST(UnateTest, RejectionWitnessRevalidatesAndTruncates) {
  const auto far = gen_parity(6);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto report = unate_test(far, Rational(1, 2), seed);
    ASSERT_EQ(report.verdict, Verdict::reject);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_TRUE(validate_witness(gen_parity(6), *report.witness));
    EXPECT_LT(report.queries, report.schedule.total_queries);
  }
}

TEST(UnateTest, SameSeedSameReport) {
  const auto o = gen_parity(4);
  const auto a = unate_test(o, Rational(1, 2), 99);
  const auto b = unate_test(o, Rational(1, 2), 99);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.queries, b.queries);
}

TEST(UnateTest, ParityRejectionFrequencyAgainstExactProbability) {
  const auto table = tabulate(gen_parity(2));
  const auto o = FunctionOracle::from_table(table);
  const auto exact = rejection_probability_exact(violation_profile(table), Rational(1, 4));
  constexpr int trials = 10000;
  int rejections = 0;
  for (int t = 0; t < trials; ++t) rejections += unate_test(o, Rational(1, 4), derive_seed(5, t)).verdict == Verdict::reject;
  const double p = static_cast<double>(exact.probability);
  EXPECT_GT(static_cast<double>(rejections) / trials, 0.999);
  EXPECT_LE(std::abs(static_cast<double>(rejections) / trials - p), 4 * std::sqrt(p * (1 - p) / trials) + 1e-12);
}

TEST(DeriveSeed, DistinctStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 10000; ++t) seen.insert(derive_seed(7, t));
  EXPECT_EQ(seen.size(), 10000U);
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
}

}  // namespace
}  // namespace unate
