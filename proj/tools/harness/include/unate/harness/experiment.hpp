#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "unate/harness/function_source.hpp"
#include "unate/tester.hpp"

namespace unate::harness {

enum class OutputFormat { csv, json };

struct ExperimentConfig {
  std::string function;  ///< path or builtin spec, echoed into the output
  Rational eps{1, 4};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;     ///< never affects the output
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  ///< empty means stdout
};

struct TrialRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::accept;
  std::uint64_t queries = 0;
  std::optional<Witness> witness;
};

struct ExperimentResult {
  ExperimentConfig config;
  TesterSchedule schedule;
  std::vector<TrialRow> trials;  ///< ordered by trial index
  std::uint64_t rejections = 0;
  double frequency = 0;
  double ci_low = 0;             ///< Wilson 95% interval
  double ci_high = 0;
  std::optional<double> analytic_probability;
  std::optional<Rational> exact_distance;
  std::optional<std::string> best_orientation;

  /// (frequency - analytic) / sqrt(p (1 - p) / T); absent without an analytic
  /// value, infinite when the analytic variance is zero and the two differ.
  std::optional<double> deviation_sigma() const;
};

/// Trial t runs with seed derive_seed(config.seed, t) on its own fork of the oracle.
ExperimentResult run_experiment(const ExperimentConfig& config, const FunctionSource& source,
                                const ExactLimits& limits = {});

/// Wilson score interval for k successes in T trials at z = 1.96.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Header: trial,seed,verdict,queries,witness_dim,witness_x,witness_y
void write_csv(const ExperimentResult& result, std::ostream& out);
nlohmann::ordered_json to_json(const ExperimentResult& result);

}  // namespace unate::harness
