#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "unate/hypercube.hpp"

namespace unate {

/// Query-counted black-box access to f : {0,1}^n -> Z.
///
/// The evaluator is immutable and shared between forks; every evaluate() call
/// bumps an atomic counter by exactly one. There is no caching: evaluating the
/// same point twice costs two queries.
class FunctionOracle {
 public:
  using Evaluator = std::function<RangeValue(PointIndex)>;

  /// n may be up to 64. The evaluator must be deterministic.
  FunctionOracle(std::size_t n, Evaluator evaluator, std::string description = {});

  /// Oracle backed by an explicit truth table, which stays reachable via table().
  static FunctionOracle from_table(HypercubeFunction table, std::string description = {});

  FunctionOracle(const FunctionOracle&) = delete;
  FunctionOracle& operator=(const FunctionOracle&) = delete;
  FunctionOracle(FunctionOracle&& other) noexcept;
  FunctionOracle& operator=(FunctionOracle&& other) noexcept;
  ~FunctionOracle() = default;

  std::size_t dimension() const noexcept { return n_; }
  const std::string& description() const noexcept { return description_; }

  /// f(x). Throws std::out_of_range when x is not a point of {0,1}^n.
  RangeValue evaluate(PointIndex x) const;

  std::uint64_t query_count() const noexcept { return queries_.load(std::memory_order_relaxed); }

  /// Same function, independent counter starting at zero.
  FunctionOracle fork() const;

  /// The backing table when the oracle was built from one, else nullptr.
  const HypercubeFunction* table() const noexcept { return table_.get(); }

 private:
  FunctionOracle(std::size_t n, std::shared_ptr<const Evaluator> evaluator,
                 std::shared_ptr<const HypercubeFunction> table, std::string description);

  std::size_t n_;
  std::shared_ptr<const Evaluator> evaluator_;
  std::shared_ptr<const HypercubeFunction> table_;
  std::string description_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

/// Materializes the oracle's truth table (n <= 30) through a fork, so the
/// caller's query count is untouched.
HypercubeFunction tabulate(const FunctionOracle& oracle);

}  // namespace unate
