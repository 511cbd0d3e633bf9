#pragma once

#include <string>
#include <string_view>

#include "unate/hypercube.hpp"

namespace unate {

// Truth-table files. Index encoding: index = sum_i x_i * 2^i.
//
//   JSON: {"n": <int>, "values": [<int>, ... 2^n entries]}
//   text: first line n, second line 2^n space-separated integers.

enum class TableFormat { json, text };

/// Detects the form from the first non-blank character ('{' means JSON).
/// Throws ParseError on malformed input and on length mismatches.
HypercubeFunction load_table(std::string_view bytes);
HypercubeFunction load_table(std::string_view bytes, TableFormat format);

/// Canonical serialization: compact JSON without spaces, or two text lines,
/// each terminated by '\n'.
std::string store_table(const HypercubeFunction& f, TableFormat format = TableFormat::json);

HypercubeFunction load_table_file(const std::string& path);

}  // namespace unate
