#include "unate/harness/report_json.hpp"

namespace unate::harness {
namespace {

Json points_json(const std::vector<PointIndex>& pts, std::size_t n) {
  Json arr = Json::array();
  for (auto x : pts) arr.push_back(point_to_string(x, n));
  return arr;
}

double as_double(long double v) { return static_cast<double>(v); }

}  // namespace

std::string_view verdict_name(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

Json rational_json(const Rational& r) { return to_string(r); }

Json to_json(const TesterSchedule& s) {
  Json rounds = Json::array();
  for (const auto& r : s.plan) {
    rounds.push_back({{"r", r.round}, {"repetitions", r.repetitions}, {"sample_size", r.sample_size}});
  }
  return {{"n", s.n}, {"eps", rational_json(s.eps)}, {"L", s.rounds}, {"rounds", rounds},
          {"total_queries", s.total_queries}};
}

Json to_json(const Witness& w, std::size_t n) {
  return {{"dimension", w.dimension},
          {"x", w.positive},
          {"y", w.negative},
          {"x_bits", point_to_string(w.positive, n)},
          {"y_bits", point_to_string(w.negative, n)}};
}

Json to_json(const TesterReport& r) {
  Json rounds = Json::array();
  for (const auto& t : r.rounds) {
    rounds.push_back({{"r", t.round},
                      {"repetitions_planned", t.repetitions_planned},
                      {"repetitions_executed", t.repetitions_executed},
                      {"sample_size", t.sample_size},
                      {"dimension_draws", t.dimension_draws}});
  }
  return {{"verdict", verdict_name(r.verdict)},
          {"witness", r.witness ? to_json(*r.witness, r.schedule.n) : Json(nullptr)},
          {"queries", r.queries},
          {"seed", r.seed},
          {"schedule", to_json(r.schedule)},
          {"rounds", rounds}};
}

Json to_json(const UnateDistance& d) {
  const auto& rep = d.report;
  return {{"n", rep.n},
          {"distance", std::to_string(rep.repair_count()) + "/" + std::to_string(rep.points())},
          {"distance_reduced", rational_json(rep.distance())},
          {"distance_decimal", to_double(rep.distance())},
          {"orientation", d.orientation.to_string()},
          {"repair_set", points_json(rep.repair_set, rep.n)},
          {"matching_lower_bound", rep.matching_size},
          {"cover_upper_bound", rep.cover_upper_bound}};
}

Json to_json(const ViolationProfile& p) {
  Json dims = Json::array();
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const auto& c = p.counts(i);
    dims.push_back({{"dimension", i}, {"up", c.up}, {"down", c.down}, {"zero", c.zero},
                    {"mu", rational_json(p.mu(i))}});
  }
  return {{"n", p.dimension()}, {"dimensions", dims}};
}

Json to_json(const BucketDecomposition& b) {
  Json buckets = Json::array();
  for (unsigned r = 1; r <= b.rounds; ++r) {
    if (!b.bucket(r).empty()) buckets.push_back({{"r", r}, {"dimensions", b.bucket(r)}});
  }
  return {{"eps", rational_json(b.eps)},
          {"L", b.rounds},
          {"buckets", buckets},
          {"below_floor", b.below_floor},
          {"mu_sum", rational_json(b.mu_sum)},
          {"lhs", rational_json(b.lhs)},
          {"rhs", rational_json(b.eps / 16)},
          {"premise", b.premise},
          {"conclusion", b.conclusion},
          {"implication_holds", b.implication_holds()}};
}

Json to_json(const RejectionAnalysis& a) {
  Json rounds = Json::array();
  for (const auto& r : a.rounds) {
    Json hits = Json::array();
    for (const auto& h : r.bucket_hits) hits.push_back({{"dimension", h.dimension}, {"probability", as_double(h.probability)}});
    rounds.push_back({{"r", r.round},
                      {"repetitions", r.repetitions},
                      {"sample_size", r.sample_size},
                      {"p", as_double(r.p)},
                      {"lower_bound", as_double(r.lower_bound)},
                      {"bound_holds", r.bound_holds()},
                      {"bucket_hits", hits},
                      {"bucket_hits_exceed_five_sixths", r.bucket_hits_exceed_five_sixths()}});
  }
  return {{"schedule", to_json(a.schedule)},
          {"buckets", to_json(a.buckets)},
          {"rounds", rounds},
          {"exponent", as_double(a.exponent)},
          {"rejection_probability", as_double(a.probability)}};
}

}  // namespace unate::harness
