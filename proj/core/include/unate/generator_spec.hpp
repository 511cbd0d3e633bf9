#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "unate/exact.hpp"
#include "unate/hypercube.hpp"
#include "unate/oracle.hpp"

namespace unate {

enum class Family { constant, dictator, parity, weighted_threshold, random_table, planted_far };

std::string_view family_name(Family f);

/// builtin:<family>[:param=value,...]
///
///   constant            n, c (default 0)
///   dictator            n, i (default 0), sign (+ or -, default +)
///   parity              n
///   weighted-threshold  n, seed (default 0), w (max |weight|, default 8)
///   random-table        n, seed (default 0), lo (default 0), hi (default 1)
///   planted-far         n, eps (target distance), seed (default 0),
///                       budget (default 10000), w (default 1)
struct GeneratorSpec {
  Family family = Family::constant;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;  ///< everything except n and seed

  /// Canonical form: parameters in sorted order, n first.
  std::string to_string() const;
};

/// Throws std::invalid_argument on unknown families, unknown keys or bad values.
GeneratorSpec parse_generator_spec(std::string_view text);

struct GeneratedFunction {
  FunctionOracle oracle;
  std::optional<HypercubeFunction> table;   ///< present when n is small enough to tabulate
  std::optional<UnateDistance> certified;   ///< planted-far only
};

/// Tables are materialized for n <= table_limit; larger closed-form families
/// stay programmatic. random-table and planted-far always need a table.
GeneratedFunction generate(const GeneratorSpec& spec, std::size_t table_limit = 20,
                           const ExactLimits& limits = {});

}  // namespace unate
