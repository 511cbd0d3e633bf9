#include "unate/harness/function_source.hpp"

#include <stdexcept>

#include "unate/table_io.hpp"

namespace unate::harness {

FunctionSource resolve_function(std::string_view source, const ExactLimits& limits) {
  if (source.substr(0, 8) == "builtin:") {
    const auto spec = parse_generator_spec(source);
    return FunctionSource{spec.to_string(), generate(spec, 20, limits)};
  }
  const std::string path(source);
  auto table = load_table_file(path);
  auto oracle = FunctionOracle::from_table(table, path);
  return FunctionSource{path, GeneratedFunction{std::move(oracle), std::move(table), std::nullopt}};
}

const HypercubeFunction& require_table(const FunctionSource& source, std::string_view command) {
  if (!source.function.table) {
    throw std::invalid_argument(std::string(command) + " needs an explicit truth table (n <= 20), got " +
                                source.label);
  }
  return *source.function.table;
}

}  // namespace unate::harness
