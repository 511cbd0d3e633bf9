#pragma once

#include "json.hpp"
#include "unate/analysis.hpp"
#include "unate/exact.hpp"
#include "unate/tester.hpp"

namespace unate::harness {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json to_json(const TesterSchedule& s);
Json to_json(const Witness& w, std::size_t n);
Json to_json(const TesterReport& r);
Json to_json(const UnateDistance& d);
Json to_json(const ViolationProfile& p);
Json to_json(const BucketDecomposition& b);
Json to_json(const RejectionAnalysis& a);

std::string_view verdict_name(Verdict v);

}  // namespace unate::harness
