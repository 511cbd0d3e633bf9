#include "unate/hypercube.hpp"

#include <algorithm>
#include <stdexcept>

namespace unate {
namespace {

void check_dimension(std::size_t i, std::size_t n) {
  if (i >= n) {
    throw std::invalid_argument("dimension " + std::to_string(i) + " out of range for n = " +
                                std::to_string(n));
  }
}

}  // namespace

PointIndex point_flip(PointIndex x, std::size_t i, std::size_t n) {
  check_dimension(i, n);
  if (!point_in_range(x, n)) {
    throw std::out_of_range("point " + std::to_string(x) + " outside {0,1}^" + std::to_string(n));
  }
  return x ^ unit_vector(i);
}

std::string point_to_string(PointIndex x, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (has_bit(x, i)) s[n - 1 - i] = '1';
  }
  return s;
}

HypercubeFunction::HypercubeFunction(std::size_t n, std::vector<RangeValue> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 1 || n_ > kMaxTableDimension) {
    throw std::invalid_argument("truth table dimension must be in [1, 30], got " + std::to_string(n_));
  }
  if (values_.size() != (std::size_t{1} << n_)) {
    throw std::invalid_argument("truth table for n = " + std::to_string(n_) + " needs " +
                                std::to_string(std::size_t{1} << n_) + " values, got " +
                                std::to_string(values_.size()));
  }
}

RangeValue HypercubeFunction::at(PointIndex x) const {
  if (x >= values_.size()) {
    throw std::out_of_range("point " + std::to_string(x) + " outside {0,1}^" + std::to_string(n_));
  }
  return values_[x];
}

Orientation::Orientation(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n > kMaxOracleDimension) throw std::invalid_argument("orientation dimension above 64");
  if (!point_in_range(mask, n)) throw std::invalid_argument("orientation mask has bits beyond n");
}

Orientation Orientation::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > kMaxOracleDimension) {
    throw std::invalid_argument("orientation must have between 1 and 64 bits");
  }
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask |= unit_vector(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("orientation bits must be 0 or 1");
    }
  }
  return Orientation(bits.size(), mask);
}

std::string Orientation::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (decreasing(i)) s[i] = '1';
  }
  return s;
}

bool Orientation::lexicographically_less(const Orientation& other) const noexcept {
  const std::size_t common = std::min(n_, other.n_);
  for (std::size_t i = 0; i < common; ++i) {
    if (decreasing(i) != other.decreasing(i)) return !decreasing(i);
  }
  return n_ < other.n_;
}

RangeValue partial_derivative(const HypercubeFunction& f, std::size_t i, PointIndex x) {
  check_dimension(i, f.dimension());
  const PointIndex hi = x | unit_vector(i);
  const PointIndex lo = x & ~unit_vector(i);
  return f.at(hi) - f.at(lo);
}

ViolationProfile::ViolationProfile(std::size_t n, std::vector<DimensionCounts> dims)
    : n_(n), dims_(std::move(dims)) {
  if (dims_.size() != n_) throw std::invalid_argument("profile needs one entry per dimension");
  if (n_ > 62) throw std::invalid_argument("profile dimension too large for exact fractions");
}

Rational ViolationProfile::mu(std::size_t i) const {
  const auto& c = counts(i);
  return Rational(static_cast<std::int64_t>(std::min(c.up, c.down)), static_cast<std::int64_t>(points()));
}

std::vector<Rational> ViolationProfile::mu() const {
  std::vector<Rational> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(mu(i));
  return out;
}

Rational ViolationProfile::one_sided_violation(std::size_t i, const Orientation& b) const {
  const auto& c = counts(i);
  const auto bad = b.decreasing(i) ? c.up : c.down;
  return Rational(static_cast<std::int64_t>(bad), static_cast<std::int64_t>(points()));
}

std::vector<Rational> ViolationProfile::one_sided_violation(const Orientation& b) const {
  if (b.dimension() != n_) throw std::invalid_argument("orientation dimension mismatch");
  std::vector<Rational> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(one_sided_violation(i, b));
  return out;
}

long double ViolationProfile::up_fraction(std::size_t i) const {
  return static_cast<long double>(counts(i).up) / static_cast<long double>(points());
}

long double ViolationProfile::down_fraction(std::size_t i) const {
  return static_cast<long double>(counts(i).down) / static_cast<long double>(points());
}

ViolationProfile violation_profile(const HypercubeFunction& f) {
  const std::size_t n = f.dimension();
  std::vector<DimensionCounts> dims(n);
  const auto values = f.values();
  for (std::size_t i = 0; i < n; ++i) {
    const PointIndex bit = unit_vector(i);
    auto& c = dims[i];
    // Walk each i-edge once from its lower endpoint; both endpoints share the sign.
    for (PointIndex x = 0; x < values.size(); ++x) {
      if ((x & bit) != 0) continue;
      const RangeValue lo = values[x];
      const RangeValue hi = values[x | bit];
      if (hi > lo) {
        c.up += 2;
      } else if (hi < lo) {
        c.down += 2;
      } else {
        c.zero += 2;
      }
    }
  }
  return ViolationProfile(n, std::move(dims));
}

bool is_b_monotone(const HypercubeFunction& f, const Orientation& b) {
  if (b.dimension() != f.dimension()) throw std::invalid_argument("orientation dimension mismatch");
  const auto values = f.values();
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    const PointIndex bit = unit_vector(i);
    const bool decreasing = b.decreasing(i);
    for (PointIndex x = 0; x < values.size(); ++x) {
      if ((x & bit) != 0) continue;
      const RangeValue lo = values[x];
      const RangeValue hi = values[x | bit];
      if (decreasing ? hi > lo : hi < lo) return false;
    }
  }
  return true;
}

std::optional<Orientation> is_unate(const HypercubeFunction& f) {
  const auto profile = violation_profile(f);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    const auto& c = profile.counts(i);
    if (c.up > 0 && c.down > 0) return std::nullopt;
    if (c.down > 0) mask |= unit_vector(i);
  }
  return Orientation(f.dimension(), mask);
}

Orientation majority_orientation(const ViolationProfile& profile) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < profile.dimension(); ++i) {
    const auto& c = profile.counts(i);
    if (!(c.up > c.down)) mask |= unit_vector(i);
  }
  return Orientation(profile.dimension(), mask);
}

}  // namespace unate
