#include "unate/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace unate {
namespace {

std::int64_t parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw std::invalid_argument("rational '" + std::string(whole) + "' out of range");
  }
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw std::overflow_error("rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.den_ + Wide{o.num_} * den_, Wide{den_} * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.den_ - Wide{o.num_} * den_, Wide{den_} * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(Wide{num_} * o.num_, Wide{den_} * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this = from_wide(Wide{num_} * o.den_, Wide{den_} * o.num_);
}

Rational Rational::operator-() const { return from_wide(-Wide{num_}, den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  __extension__ using Wide = __int128;
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    const auto q = parse_integer(den, whole);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    result = Rational(parse_integer(num, whole), q);
  } else {
    auto dot = text.find('.');
    auto int_part = text.substr(0, dot);
    auto frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) || !all_digits(frac_part)) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.remove_suffix(1);
    if (frac_part.size() > 18) {
      throw std::invalid_argument("too many decimal places in '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    const std::int64_t ip = int_part.empty() ? 0 : parse_integer(int_part, whole);
    const std::int64_t fp = frac_part.empty() ? 0 : parse_integer(frac_part, whole);
    if (ip > (std::numeric_limits<std::int64_t>::max() - fp) / scale) {
      throw std::invalid_argument("rational '" + std::string(whole) + "' out of range");
    }
    result = Rational(ip * scale + fp, scale);
  }
  return negative ? -result : result;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational pow2(unsigned k) {
  if (k > 62) throw std::invalid_argument("pow2 exponent too large");
  return Rational(std::int64_t{1} << k);
}

}  // namespace unate
