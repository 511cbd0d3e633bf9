#pragma once

#include <string>
#include <string_view>

#include "unate/exact.hpp"
#include "unate/generator_spec.hpp"

namespace unate::harness {

/// A function named on the command line: either "builtin:<family>[:k=v,...]"
/// or a path to a truth-table file (JSON or text form).
struct FunctionSource {
  std::string label;
  GeneratedFunction function;
};

/// Throws ParseError for malformed files, std::invalid_argument for bad
/// builtin specs and std::runtime_error for unreadable paths.
FunctionSource resolve_function(std::string_view source, const ExactLimits& limits = {});

/// The explicit table, or std::invalid_argument naming the command that needs it.
const HypercubeFunction& require_table(const FunctionSource& source, std::string_view command);

}  // namespace unate::harness
