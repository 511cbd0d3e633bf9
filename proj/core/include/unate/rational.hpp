#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace unate {

/// Exact rational with 64-bit numerator and positive 64-bit denominator, kept
/// in lowest terms. Arithmetic runs in 128 bits and throws std::overflow_error
/// when a reduced result does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  __extension__ using Wide = __int128;
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Parses "p/q" or a plain decimal ("0.25", "1", ".5") into an exact rational.
/// Throws std::invalid_argument on malformed text or values that would not
/// fit in 64-bit numerator/denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// 2^k as a rational, k <= 62.
Rational pow2(unsigned k);

}  // namespace unate
