#include "unate/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "unate/analysis.hpp"
#include "unate/harness/report_json.hpp"

namespace unate::harness {
namespace {

TrialRow run_trial(const FunctionOracle& oracle, const TesterSchedule& schedule, std::uint64_t master,
                   std::uint64_t trial) {
  const auto view = oracle.fork();
  TrialRow row;
  row.trial = trial;
  row.seed = derive_seed(master, trial);
  Rng rng(row.seed);
  const auto report = unate_test(view, schedule, rng, row.seed);
  if (report.queries != view.query_count()) {
    throw std::logic_error("tester query accounting disagrees with the oracle counter");
  }
  row.verdict = report.verdict;
  row.queries = report.queries;
  row.witness = report.witness;
  return row;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double denom = 1 + z * z / t;
  const double center = (p + z * z / (2 * t)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / t + z * z / (4 * t * t)) / denom;
  // Clamp so the interval contains p despite rounding at the ends.
  return {std::min(p, std::max(0.0, center - half)), std::max(p, std::min(1.0, center + half))};
}

std::optional<double> ExperimentResult::deviation_sigma() const {
  if (!analytic_probability) return std::nullopt;
  const double p = *analytic_probability;
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials.size()));
  const double diff = frequency - p;
  if (sigma == 0) return diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / sigma;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const FunctionSource& source,
                                const ExactLimits& limits) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const auto& oracle = source.function.oracle;

  ExperimentResult result;
  result.config = config;
  result.schedule = build_schedule(oracle.dimension(), config.eps);
  result.trials.resize(config.trials);

  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(
                                                                          std::min<std::uint64_t>(config.trials, 1024))));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t t = next++; t < config.trials; t = next++) {
        result.trials[t] = run_trial(oracle, result.schedule, config.seed, t);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = config.trials;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& row : result.trials) {
    if (row.verdict == Verdict::reject) ++result.rejections;
  }
  result.frequency = static_cast<double>(result.rejections) / static_cast<double>(config.trials);
  std::tie(result.ci_low, result.ci_high) = wilson_interval(result.rejections, config.trials);

  if (const auto& table = source.function.table) {
    const auto analysis = rejection_probability_exact(violation_profile(*table), config.eps);
    result.analytic_probability = static_cast<double>(analysis.probability);
    if (source.function.certified) {
      result.exact_distance = source.function.certified->report.distance();
      result.best_orientation = source.function.certified->orientation.to_string();
    } else if (table->dimension() <= limits.max_dimension) {
      const auto d = distance_to_unate(*table, limits);
      result.exact_distance = d.report.distance();
      result.best_orientation = d.orientation.to_string();
    }
  }
  return result;
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "trial,seed,verdict,queries,witness_dim,witness_x,witness_y\n";
  for (const auto& row : result.trials) {
    out << row.trial << ',' << row.seed << ',' << verdict_name(row.verdict) << ',' << row.queries << ',';
    if (row.witness) {
      out << row.witness->dimension << ',' << row.witness->positive << ',' << row.witness->negative;
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

nlohmann::ordered_json to_json(const ExperimentResult& result) {
  Json trials = Json::array();
  for (const auto& row : result.trials) {
    trials.push_back({{"trial", row.trial},
                      {"seed", row.seed},
                      {"verdict", verdict_name(row.verdict)},
                      {"queries", row.queries},
                      {"witness_dim", row.witness ? Json(row.witness->dimension) : Json(nullptr)},
                      {"witness_x", row.witness ? Json(row.witness->positive) : Json(nullptr)},
                      {"witness_y", row.witness ? Json(row.witness->negative) : Json(nullptr)}});
  }
  const auto dev = result.deviation_sigma();
  Json deviation = nullptr;
  if (dev && std::isfinite(*dev)) deviation = *dev;
  Json aggregate = {{"trials", result.trials.size()},
                    {"rejections", result.rejections},
                    {"frequency", result.frequency},
                    {"ci95_low", result.ci_low},
                    {"ci95_high", result.ci_high},
                    {"analytic_probability",
                     result.analytic_probability ? Json(*result.analytic_probability) : Json(nullptr)},
                    {"deviation_sigma", deviation},
                    {"exact_distance", result.exact_distance ? rational_json(*result.exact_distance) : Json(nullptr)},
                    {"best_orientation", result.best_orientation ? Json(*result.best_orientation) : Json(nullptr)}};
  return {{"function", result.config.function},
          {"eps", rational_json(result.config.eps)},
          {"seed", result.config.seed},
          {"schedule", to_json(result.schedule)},
          {"aggregate", aggregate},
          {"trials", trials}};
}

}  // namespace unate::harness
