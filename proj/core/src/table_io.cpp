#include "unate/table_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "unate/errors.hpp"

namespace unate {
namespace {

// Line number (1-based) of a byte offset.
std::size_t line_of(std::string_view bytes, std::size_t offset) {
  offset = std::min(offset, bytes.size());
  std::size_t line = 1;
  for (std::size_t k = 0; k < offset; ++k) {
    if (bytes[k] == '\n') ++line;
  }
  return line;
}

HypercubeFunction build(std::string_view bytes, std::int64_t n, std::vector<RangeValue> values,
                        std::size_t offset) {
  if (n < 1 || n > static_cast<std::int64_t>(kMaxTableDimension)) {
    throw ParseError("dimension n must be in [1, 30], got " + std::to_string(n), line_of(bytes, offset), offset);
  }
  const std::size_t expected = std::size_t{1} << n;
  if (values.size() != expected) {
    throw ParseError("length mismatch: n = " + std::to_string(n) + " needs " + std::to_string(expected) +
                         " values, got " + std::to_string(values.size()),
                     line_of(bytes, offset), offset);
  }
  return HypercubeFunction(static_cast<std::size_t>(n), std::move(values));
}

HypercubeFunction load_json(std::string_view bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes.begin(), bytes.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(bytes, offset), offset);
  }
  const std::size_t end = bytes.size();
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
    throw ParseError("expected an object with keys \"n\" and \"values\"", line_of(bytes, end), end);
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "n" && key != "values") throw ParseError("unexpected key \"" + key + "\"", line_of(bytes, end), end);
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", line_of(bytes, end), end);
  if (!doc["values"].is_array()) throw ParseError("\"values\" must be an array", line_of(bytes, end), end);
  std::vector<RangeValue> values;
  values.reserve(doc["values"].size());
  for (const auto& v : doc["values"]) {
    if (!v.is_number_integer()) {
      throw ParseError("value #" + std::to_string(values.size()) + " is not an integer", line_of(bytes, end), end);
    }
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      throw ParseError("value #" + std::to_string(values.size()) + " exceeds int64", line_of(bytes, end), end);
    }
    values.push_back(v.get<RangeValue>());
  }
  return build(bytes, doc["n"].get<std::int64_t>(), std::move(values), end);
}

class TextScanner {
 public:
  explicit TextScanner(std::string_view bytes) : bytes_(bytes) {}

  void skip_blanks() {
    while (pos_ < bytes_.size() && (bytes_[pos_] == ' ' || bytes_[pos_] == '\t' || bytes_[pos_] == '\r')) ++pos_;
  }
  bool at_line_end() { skip_blanks(); return pos_ == bytes_.size() || bytes_[pos_] == '\n'; }
  bool at_end() const { return pos_ == bytes_.size(); }
  void next_line() {
    skip_blanks();
    if (pos_ < bytes_.size() && bytes_[pos_] == '\n') ++pos_;
  }
  std::size_t offset() const { return pos_; }
  std::size_t line() const { return line_of(bytes_, pos_); }

  std::int64_t integer() {
    skip_blanks();
    const char* first = bytes_.data() + pos_;
    const char* last = bytes_.data() + bytes_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || (ptr != last && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw ParseError("expected an integer", line(), pos_);
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

HypercubeFunction load_text(std::string_view bytes) {
  TextScanner scan(bytes);
  if (scan.at_line_end()) throw ParseError("expected dimension on first line", scan.line(), scan.offset());
  const auto n = scan.integer();
  if (!scan.at_line_end()) throw ParseError("trailing data after dimension", scan.line(), scan.offset());
  scan.next_line();
  const std::size_t values_start = scan.offset();
  std::vector<RangeValue> values;
  while (!scan.at_line_end()) values.push_back(scan.integer());
  scan.next_line();
  while (!scan.at_end()) {
    if (!scan.at_line_end()) throw ParseError("unexpected data after values line", scan.line(), scan.offset());
    scan.next_line();
  }
  return build(bytes, n, std::move(values), values_start);
}

}  // namespace

HypercubeFunction load_table(std::string_view bytes, TableFormat format) {
  return format == TableFormat::json ? load_json(bytes) : load_text(bytes);
}

HypercubeFunction load_table(std::string_view bytes) {
  for (char c : bytes) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return load_table(bytes, c == '{' ? TableFormat::json : TableFormat::text);
  }
  throw ParseError("empty truth-table input", line_of(bytes, bytes.size()), bytes.size());
}

std::string store_table(const HypercubeFunction& f, TableFormat format) {
  std::ostringstream out;
  if (format == TableFormat::json) {
    out << "{\"n\":" << f.dimension() << ",\"values\":[";
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << f(k);
    out << "]}\n";
  } else {
    out << f.dimension() << '\n';
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? " " : "") << f(k);
    out << '\n';
  }
  return out.str();
}

HypercubeFunction load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open truth-table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_table(buf.str());
}

}  // namespace unate
