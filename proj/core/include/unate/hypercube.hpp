#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unate/rational.hpp"

namespace unate {

/// A vertex of {0,1}^n. Bit i (least significant first) is coordinate x_i.
using PointIndex = std::uint64_t;

/// Values of the functions under test. Any totally ordered range works for the
/// tester; integers additionally make the exact repair oracle well defined.
using RangeValue = std::int64_t;

/// Largest dimension for which an explicit truth table is materialized.
inline constexpr std::size_t kMaxTableDimension = 30;

/// Largest dimension a programmatic oracle may have (one machine word).
inline constexpr std::size_t kMaxOracleDimension = 64;

constexpr PointIndex unit_vector(std::size_t i) noexcept { return PointIndex{1} << i; }

constexpr bool has_bit(PointIndex x, std::size_t i) noexcept { return ((x >> i) & 1U) != 0; }

/// Mask of all valid points for dimension n (n <= 64).
constexpr PointIndex point_mask(std::size_t n) noexcept {
  return n >= 64 ? ~PointIndex{0} : (PointIndex{1} << n) - 1;
}

constexpr bool point_in_range(PointIndex x, std::size_t n) noexcept {
  return (x & ~point_mask(n)) == 0;
}

/// x xor e_i. Throws std::invalid_argument when i >= n and std::out_of_range
/// when x is not a point of {0,1}^n.
PointIndex point_flip(PointIndex x, std::size_t i, std::size_t n);

/// Binary rendering x_{n-1} ... x_0, matching the usual integer notation.
std::string point_to_string(PointIndex x, std::size_t n);

/// Explicit truth table f : {0,1}^n -> Z, indexed by PointIndex.
class HypercubeFunction {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= 30 and values.size() == 2^n.
  HypercubeFunction(std::size_t n, std::vector<RangeValue> values);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }

  RangeValue operator()(PointIndex x) const noexcept { return values_[x]; }
  RangeValue at(PointIndex x) const;

  std::span<const RangeValue> values() const noexcept { return values_; }
  std::vector<RangeValue>& mutable_values() noexcept { return values_; }

  friend bool operator==(const HypercubeFunction&, const HypercubeFunction&) = default;

 private:
  std::size_t n_;
  std::vector<RangeValue> values_;
};

/// The bit vector b selecting, per dimension, increasing (b_i = 0) or
/// decreasing (b_i = 1) behaviour.
class Orientation {
 public:
  Orientation() = default;
  /// Bit i of mask is b_i.
  Orientation(std::size_t n, std::uint64_t mask);

  static Orientation all_increasing(std::size_t n) { return Orientation(n, 0); }
  /// Parses "b_0 b_1 ... b_{n-1}" written without separators, e.g. "10".
  static Orientation parse(std::string_view bits);

  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool decreasing(std::size_t i) const noexcept { return has_bit(mask_, i); }

  /// b_0 first, so "10" means dimension 0 decreasing and dimension 1 increasing.
  std::string to_string() const;

  /// Lexicographic on (b_0, b_1, ...).
  bool lexicographically_less(const Orientation& other) const noexcept;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

/// f(x xor e_i) - f(x) when x_i = 0, f(x) - f(x xor e_i) when x_i = 1.
RangeValue partial_derivative(const HypercubeFunction& f, std::size_t i, PointIndex x);

struct DimensionCounts {
  std::uint64_t up = 0;    ///< |U_i|: points with a strictly positive derivative
  std::uint64_t down = 0;  ///< |D_i|: points with a strictly negative derivative
  std::uint64_t zero = 0;

  friend bool operator==(const DimensionCounts&, const DimensionCounts&) = default;
};

/// Exact per-dimension derivative sign counts of an explicit table.
class ViolationProfile {
 public:
  ViolationProfile(std::size_t n, std::vector<DimensionCounts> dims);

  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t points() const noexcept { return std::uint64_t{1} << n_; }
  const DimensionCounts& counts(std::size_t i) const { return dims_.at(i); }
  std::span<const DimensionCounts> all_counts() const noexcept { return dims_; }

  /// min(|U_i|, |D_i|) / 2^n.
  Rational mu(std::size_t i) const;
  std::vector<Rational> mu() const;

  /// Fraction of points whose i-th derivative has the sign forbidden by b_i.
  Rational one_sided_violation(std::size_t i, const Orientation& b) const;
  std::vector<Rational> one_sided_violation(const Orientation& b) const;

  /// |U_i| / 2^n and |D_i| / 2^n in floating point, for probability formulas.
  long double up_fraction(std::size_t i) const;
  long double down_fraction(std::size_t i) const;

 private:
  std::size_t n_;
  std::vector<DimensionCounts> dims_;
};

ViolationProfile violation_profile(const HypercubeFunction& f);

bool is_b_monotone(const HypercubeFunction& f, const Orientation& b);

/// A witnessing orientation if f is unate. Dimensions with only zero
/// derivatives report b_i = 0.
std::optional<Orientation> is_unate(const HypercubeFunction& f);

/// The orientation whose violations are exactly mu_i in every dimension:
/// b_i = 0 when |U_i| > |D_i|, else 1.
Orientation majority_orientation(const ViolationProfile& profile);

}  // namespace unate
