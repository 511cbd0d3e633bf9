#include "unate/harness/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "unate/analysis.hpp"
#include "unate/errors.hpp"
#include "unate/harness/experiment.hpp"
#include "unate/harness/function_source.hpp"
#include "unate/harness/report_json.hpp"
#include "unate/table_io.hpp"

namespace unate::harness {
namespace {

struct CommonOptions {
  std::string fn;
  std::string eps = "1/4";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  unsigned jobs = 1;
  std::string format;
  std::string out;
  std::size_t cap = 5;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_eps(const std::string& text) {
  const Rational eps = parse_rational(text);
  if (eps <= 0 || eps > 1) throw UsageError("--eps must lie in (0, 1], got " + text);
  return eps;
}

ExactLimits limits_from(const CommonOptions& o) {
  if (o.cap > ExactLimits::kHardCap) {
    throw UsageError("--cap cannot exceed " + std::to_string(ExactLimits::kHardCap));
  }
  return ExactLimits{o.cap};
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << data;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string points_set(const std::vector<PointIndex>& pts, std::size_t n) {
  std::string s = "{";
  for (std::size_t k = 0; k < pts.size(); ++k) s += (k ? ", " : "") + point_to_string(pts[k], n);
  return s + "}";
}

std::string dims_set(const std::vector<std::size_t>& dims) {
  std::string s = "{";
  for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? ", " : "") + std::to_string(dims[k]);
  return s + "}";
}

bool want_json(const CommonOptions& o, std::initializer_list<std::string_view> allowed) {
  if (o.format.empty()) return false;
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    throw UsageError("unsupported --format '" + o.format + "'");
  }
  return o.format == "json";
}

int cmd_test(const CommonOptions& o, std::ostream& out) {
  const bool json = want_json(o, {"text", "json"});
  const auto eps = parse_eps(o.eps);
  const auto source = resolve_function(o.fn, limits_from(o));
  const auto& oracle = source.function.oracle;
  const auto report = unate_test(oracle, eps, o.seed);
  auto doc = to_json(report);
  doc["function"] = source.label;
  if (report.witness) doc["witness_revalidated"] = validate_witness(oracle.fork(), *report.witness);
  if (!o.out.empty()) write_output(o.out, doc.dump(2) + "\n", out);

  if (json) {
    out << doc.dump(2) << '\n';
  } else {
    const std::size_t n = oracle.dimension();
    out << "function: " << source.label << '\n';
    out << "verdict: " << verdict_name(report.verdict) << '\n';
    if (report.witness) {
      const auto& w = *report.witness;
      out << "witness: dimension " << w.dimension << ", x = " << point_to_string(w.positive, n)
          << " (derivative > 0), y = " << point_to_string(w.negative, n) << " (derivative < 0)\n";
    }
    out << "queries: " << report.queries << " (schedule total " << report.schedule.total_queries << ")\n";
    out << "seed: " << report.seed << '\n';
  }
  return report.verdict == Verdict::accept ? kExitAccept : kExitReject;
}

int cmd_distance(const CommonOptions& o, std::ostream& out) {
  const bool json = want_json(o, {"text", "json"});
  const auto limits = limits_from(o);
  const auto source = resolve_function(o.fn, limits);
  const auto& table = require_table(source, "distance");
  const auto d = distance_to_unate(table, limits);
  if (json) {
    out << to_json(d).dump(2) << '\n';
    return 0;
  }
  const auto& rep = d.report;
  out << "distance: " << rep.repair_count() << '/' << rep.points() << " (" << to_double(rep.distance()) << ")\n";
  out << "orientation: " << d.orientation.to_string() << '\n';
  out << "repair: " << points_set(rep.repair_set, rep.n) << '\n';
  out << "matching lower bound: " << rep.matching_size << ", cover upper bound: " << rep.cover_upper_bound << '\n';
  return 0;
}

int cmd_profile(const CommonOptions& o, std::ostream& out) {
  const bool json = want_json(o, {"text", "json"});
  const auto source = resolve_function(o.fn, limits_from(o));
  const auto profile = violation_profile(require_table(source, "profile"));
  if (json) {
    out << to_json(profile).dump(2) << '\n';
    return 0;
  }
  out << "dim up down zero mu\n";
  for (std::size_t i = 0; i < profile.dimension(); ++i) {
    const auto& c = profile.counts(i);
    out << i << ' ' << c.up << ' ' << c.down << ' ' << c.zero << ' ' << to_string(profile.mu(i)) << '\n';
  }
  return 0;
}

int cmd_analyze(const CommonOptions& o, std::ostream& out) {
  const bool json = want_json(o, {"text", "json"});
  const auto eps = parse_eps(o.eps);
  const auto source = resolve_function(o.fn, limits_from(o));
  const auto profile = violation_profile(require_table(source, "analyze"));
  const auto analysis = rejection_probability_exact(profile, eps);
  if (json) {
    auto doc = to_json(analysis);
    doc["mu"] = Json::array();
    for (const auto& m : profile.mu()) doc["mu"].push_back(to_string(m));
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << "mu: (";
  const auto mu = profile.mu();
  for (std::size_t i = 0; i < mu.size(); ++i) out << (i ? ", " : "") << to_string(mu[i]);
  out << ")\n";
  const auto& b = analysis.buckets;
  out << "L: " << b.rounds << '\n';
  for (unsigned r = 1; r <= b.rounds; ++r) {
    if (!b.bucket(r).empty()) out << "S_" << r << " = " << dims_set(b.bucket(r)) << '\n';
  }
  if (!b.below_floor.empty()) out << "below 2^-L: " << dims_set(b.below_floor) << '\n';
  out << "bucket sum: lhs = " << to_string(b.lhs) << ", rhs = eps/16 = " << to_string(b.eps / 16)
      << ", sum mu = " << to_string(b.mu_sum) << ", premise " << (b.premise ? "true" : "false")
      << ", implication " << (b.implication_holds() ? "holds" : "FAILS") << '\n';
  out << "r s_r m_r p_r bound(5/6|S_r|/n) min_bucket_hit\n";
  out << std::setprecision(12);
  for (const auto& r : analysis.rounds) {
    out << r.round << ' ' << r.repetitions << ' ' << r.sample_size << ' ' << static_cast<double>(r.p) << ' '
        << static_cast<double>(r.lower_bound) << ' ';
    if (r.bucket_hits.empty()) {
      out << '-';
    } else {
      long double lo = 1;
      for (const auto& h : r.bucket_hits) lo = std::min(lo, h.probability);
      out << static_cast<double>(lo);
    }
    out << (r.bound_holds() && r.bucket_hits_exceed_five_sixths() ? "" : " VIOLATED") << '\n';
  }
  out << "rejection probability: " << static_cast<double>(analysis.probability) << '\n';
  return 0;
}

int cmd_experiment(const CommonOptions& o, std::ostream& out) {
  ExperimentConfig config;
  config.function = o.fn;
  config.eps = parse_eps(o.eps);
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  config.trials = o.trials;
  config.seed = o.seed;
  config.jobs = std::max(1U, o.jobs);
  if (o.format.empty() || o.format == "csv") {
    config.format = OutputFormat::csv;
  } else if (o.format == "json") {
    config.format = OutputFormat::json;
  } else {
    throw UsageError("experiment --format must be csv or json");
  }
  config.out_path = o.out;
  const auto limits = limits_from(o);
  const auto source = resolve_function(o.fn, limits);
  const auto result = run_experiment(config, source, limits);

  std::ostringstream data;
  if (config.format == OutputFormat::csv) {
    write_csv(result, data);
  } else {
    data << to_json(result).dump(2) << '\n';
  }
  write_output(config.out_path, data.str(), out);
  if (!config.out_path.empty()) {
    out << "trials: " << result.trials.size() << ", rejections: " << result.rejections
        << ", frequency: " << result.frequency << " [" << result.ci_low << ", " << result.ci_high << "]\n";
    if (result.analytic_probability) {
      out << "analytic: " << *result.analytic_probability;
      if (auto dev = result.deviation_sigma()) out << ", deviation: " << *dev << " sigma";
      out << '\n';
    }
    if (result.exact_distance) out << "exact distance: " << to_string(*result.exact_distance) << '\n';
  }
  return 0;
}

int cmd_gen(const CommonOptions& o, std::ostream& out) {
  TableFormat format = TableFormat::json;
  if (o.format == "text") {
    format = TableFormat::text;
  } else if (!o.format.empty() && o.format != "json") {
    throw UsageError("gen --format must be json or text");
  }
  if (o.fn.substr(0, 8) != "builtin:") throw UsageError("gen needs a builtin:<family> function");
  const auto source = resolve_function(o.fn, limits_from(o));
  write_output(o.out, store_table(require_table(source, "gen"), format), out);
  return 0;
}

void add_fn(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--fn", o.fn, "truth-table path or builtin:<family>[:k=v,...]")->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unateness property tester and exact oracles", "unate"};
  app.require_subcommand(1);
  CommonOptions o;

  auto* test = app.add_subcommand("test", "run the non-adaptive unateness tester once");
  add_fn(test, o);
  test->add_option("--eps", o.eps, "distance parameter, decimal or p/q");
  test->add_option("--seed", o.seed);
  test->add_option("--format", o.format, "text or json");
  test->add_option("--out", o.out, "also write the JSON report here");
  test->add_option("--cap", o.cap);

  auto* distance = app.add_subcommand("distance", "exact distance to unateness (n <= cap)");
  add_fn(distance, o);
  distance->add_option("--format", o.format, "text or json");
  distance->add_option("--cap", o.cap, "exact-oracle dimension cap (at most 6)");

  auto* profile = app.add_subcommand("profile", "per-dimension derivative sign counts");
  add_fn(profile, o);
  profile->add_option("--format", o.format, "text or json");

  auto* analyze = app.add_subcommand("analyze", "bucket decomposition and exact rejection probability");
  add_fn(analyze, o);
  analyze->add_option("--eps", o.eps);
  analyze->add_option("--format", o.format, "text or json");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo rejection-rate experiment");
  add_fn(experiment, o);
  experiment->add_option("--eps", o.eps);
  experiment->add_option("--seed", o.seed, "master seed");
  experiment->add_option("--trials", o.trials);
  experiment->add_option("--jobs", o.jobs, "worker threads; output is independent of this");
  experiment->add_option("--format", o.format, "csv or json");
  experiment->add_option("--out", o.out);
  experiment->add_option("--cap", o.cap);

  auto* gen = app.add_subcommand("gen", "write a builtin function as a truth-table file");
  add_fn(gen, o);
  gen->add_option("--format", o.format, "json or text");
  gen->add_option("--out", o.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (test->parsed()) return cmd_test(o, out);
    if (distance->parsed()) return cmd_distance(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (experiment->parsed()) return cmd_experiment(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace unate::harness
