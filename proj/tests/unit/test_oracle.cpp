#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "unate/errors.hpp"
#include "unate/generator_spec.hpp"
#include "unate/generators.hpp"
#include "unate/oracle.hpp"
#include "unate/table_io.hpp"

namespace unate {
namespace {

std::vector<RangeValue> values_of(const FunctionOracle& o) {
  const auto t = tabulate(o);
  return {t.values().begin(), t.values().end()};
}

TEST(FunctionOracle, CountsEveryEvaluation) {
  const auto parity = gen_parity(3);
  EXPECT_EQ(parity.evaluate(0b101), 0);
  EXPECT_EQ(parity.query_count(), 1U);

  const auto seven = gen_constant(4, 7);
  EXPECT_EQ(seven.evaluate(9), 7);
  EXPECT_EQ(seven.query_count(), 1U);

  EXPECT_EQ(parity.evaluate(0b111), parity.evaluate(0b111));
  EXPECT_EQ(parity.query_count(), 3U);
}

TEST(FunctionOracle, RejectsOutOfRangePoints) {
  const auto parity = gen_parity(3);
  EXPECT_THROW(parity.evaluate(8), std::out_of_range);
  EXPECT_EQ(parity.query_count(), 0U);
  EXPECT_NO_THROW(gen_parity(64).evaluate(~PointIndex{0}));
}

TEST(FunctionOracle, ForksShareTheFunctionNotTheCounter) {
  const auto o = gen_parity(5);
  o.evaluate(1);
  const auto f = o.fork();
  EXPECT_EQ(f.query_count(), 0U);
  EXPECT_EQ(f.evaluate(3), o.evaluate(3));
  EXPECT_EQ(o.query_count(), 2U);
  EXPECT_EQ(f.query_count(), 1U);
  EXPECT_EQ(tabulate(o), tabulate(f));
  EXPECT_EQ(o.query_count(), 2U);  // tabulate goes through a fork
}

TEST(FunctionOracle, ConcurrentCountIsExact) {
  const auto o = gen_parity(10);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&o] {
      for (PointIndex x = 0; x < 1024; ++x) o.evaluate(x);
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(o.query_count(), 4U * 1024U);
}

TEST(Generators, ClosedFormTables) {
  EXPECT_EQ(values_of(gen_parity(2)), (std::vector<RangeValue>{0, 1, 1, 0}));
  EXPECT_EQ(values_of(gen_dictator(2, 0, Direction::increasing)), (std::vector<RangeValue>{0, 1, 0, 1}));
  EXPECT_EQ(values_of(gen_dictator(2, 0, Direction::decreasing)), (std::vector<RangeValue>{1, 0, 1, 0}));
  EXPECT_EQ(values_of(gen_constant(1, 4)), (std::vector<RangeValue>{4, 4}));
  EXPECT_THROW(gen_dictator(2, 2, Direction::increasing), std::invalid_argument);
}

TEST(Generators, WeightedThresholdExample) {
  const auto f = tabulate(gen_weighted_threshold({3, -2}));
  EXPECT_EQ(std::vector<RangeValue>(f.values().begin(), f.values().end()), (std::vector<RangeValue>{0, 3, -2, 1}));
  EXPECT_EQ(is_unate(f), Orientation::parse("01"));
  EXPECT_THROW(gen_weighted_threshold({1, 0}), std::invalid_argument);
}

TEST(Generators, WeightedThresholdIsUnateAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 12;
    const auto weights = draw_weights(n, seed);
    for (auto w : weights) {
      EXPECT_NE(w, 0);
      EXPECT_LE(std::abs(w), 8);
    }
    const auto f = tabulate(gen_weighted_threshold(n, seed));
    const auto b = is_unate(f);
    ASSERT_TRUE(b.has_value());
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(b->decreasing(i), weights[i] < 0);
    EXPECT_EQ(f, tabulate(gen_weighted_threshold(n, seed)));
  }
}

TEST(Generators, RandomTableDeterministicUpToTwelveDimensions) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(gen_random_table(n, 42, -3, 3), gen_random_table(n, 42, -3, 3));
    const auto t = gen_random_table(n, 42, -3, 3);
    for (auto v : t.values()) {
      EXPECT_GE(v, -3);
      EXPECT_LE(v, 3);
    }
  }
  EXPECT_NE(gen_random_table(8, 1, 0, 1), gen_random_table(8, 2, 0, 1));
}

TEST(Generators, PlantedFarReachesTarget) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Rational target(1, 8);
      const auto p = gen_planted_far(n, target, seed, 10000);
      EXPECT_GE(p.distance.report.distance(), target);
      EXPECT_EQ(distance_to_unate(p.function).report.distance(), p.distance.report.distance());
      EXPECT_FALSE(is_unate(p.function).has_value());
    }
  }
}

TEST(Generators, PlantedFarZeroTargetReturnsSeedFunction) {
  const auto p = gen_planted_far(4, Rational(0), 17, 10);
  EXPECT_EQ(p.attempts, 0U);
  EXPECT_EQ(p.distance.report.repair_count(), 0U);
  EXPECT_EQ(p.function, tabulate(gen_weighted_threshold(4, 17, 1)));
}

TEST(Generators, PlantedFarOnParitySizedTarget) {
  const auto exact = distance_to_unate(tabulate(gen_parity(2)));
  EXPECT_EQ(exact.report.distance(), Rational(1, 4));
  const auto p = gen_planted_far(2, Rational(1, 4), 3, 10000);
  EXPECT_EQ(p.distance.report.distance(), Rational(1, 4));
}

TEST(Generators, PlantedFarTooFarExhaustsBudget) {
  EXPECT_THROW(gen_planted_far(5, parse_rational("0.4"), 1, 300), BudgetExhausted);
  EXPECT_THROW(gen_planted_far(6, Rational(1, 8), 1, 10), CapExceeded);
  EXPECT_THROW(gen_planted_far(3, Rational(3, 4), 1, 10), std::invalid_argument);
}

TEST(TableIo, LoadsBothForms) {
  const auto parity = HypercubeFunction(2, {0, 1, 1, 0});
  EXPECT_EQ(load_table(R"({"n":2,"values":[0,1,1,0]})"), parity);
  EXPECT_EQ(load_table("  {\n \"values\": [0, 1, 1, 0], \"n\": 2 }\n"), parity);
  EXPECT_EQ(load_table("2\n0 1 1 0\n"), parity);
  EXPECT_EQ(load_table("2\n0 1 1 0"), parity);
  EXPECT_EQ(store_table(parity), "{\"n\":2,\"values\":[0,1,1,0]}\n");
  EXPECT_EQ(store_table(parity, TableFormat::text), "2\n0 1 1 0\n");
}

TEST(TableIo, ReportsErrors) {
  EXPECT_THROW(load_table(R"({"n":2,"values":[0,1,1]})"), ParseError);
  EXPECT_THROW(load_table("2\n0 1 1\n"), ParseError);
  EXPECT_THROW(load_table(R"({"n":2,"values":[0,1,1,0)"), ParseError);
  EXPECT_THROW(load_table(R"({"n":2,"values":[0,1,1,"x"]})"), ParseError);
  EXPECT_THROW(load_table(R"({"n":2,"values":[0,1,1,0],"extra":1})"), ParseError);
  EXPECT_THROW(load_table(R"({"n":0,"values":[0]})"), ParseError);
  EXPECT_THROW(load_table("2\n0 1 1 0\n5\n"), ParseError);
  EXPECT_THROW(load_table("2 3\n0 1 1 0\n"), ParseError);
  EXPECT_THROW(load_table("2\n0 1 one 0\n"), ParseError);
  EXPECT_THROW(load_table(""), ParseError);
  try {
    load_table("2\n0 1 x 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.offset(), 6U);
  }
}

TEST(TableIo, RoundTripProperty) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto f = gen_random_table(n, rng(), -1000000, 1000000);
    for (auto format : {TableFormat::json, TableFormat::text}) {
      const auto bytes = store_table(f, format);
      EXPECT_EQ(load_table(bytes), f);
      EXPECT_EQ(store_table(load_table(bytes), format), bytes);
    }
  }
  const auto extreme = HypercubeFunction(1, {INT64_MIN, INT64_MAX});
  EXPECT_EQ(load_table(store_table(extreme)), extreme);
  EXPECT_EQ(load_table(store_table(extreme, TableFormat::text)), extreme);
}

TEST(GeneratorSpec, ParsesBuiltinGrammar) {
  const auto s = parse_generator_spec("builtin:dictator:n=3,i=2,sign=-");
  EXPECT_EQ(s.family, Family::dictator);
  EXPECT_EQ(s.n, 3U);
  EXPECT_EQ(s.params.at("sign"), "-");
  EXPECT_EQ(s.to_string(), "builtin:dictator:n=3,i=2,sign=-");
  EXPECT_EQ(parse_generator_spec(s.to_string()).to_string(), s.to_string());

  const auto g = generate(s);
  ASSERT_TRUE(g.table.has_value());
  EXPECT_EQ(is_unate(*g.table), Orientation::parse("001"));

  for (const char* bad : {"parity:n=2", "builtin:nope:n=2", "builtin:parity", "builtin:parity:n=2,q=1",
                          "builtin:parity:n=x", "builtin:parity:n=0", "builtin:parity:n=65",
                          "builtin:planted-far:n=3", "builtin:parity:n=2,n"}) {
    EXPECT_THROW(parse_generator_spec(bad), std::invalid_argument) << bad;
  }
}

TEST(GeneratorSpec, LargeDimensionsStayProgrammatic) {
  const auto g = generate(parse_generator_spec("builtin:weighted-threshold:n=40,seed=5"));
  EXPECT_FALSE(g.table.has_value());
  EXPECT_EQ(g.oracle.dimension(), 40U);
  const auto small = generate(parse_generator_spec("builtin:planted-far:n=3,eps=1/8,seed=2"));
  ASSERT_TRUE(small.certified.has_value());
  EXPECT_GE(small.certified->report.distance(), Rational(1, 8));
}

}  // namespace
}  // namespace unate
