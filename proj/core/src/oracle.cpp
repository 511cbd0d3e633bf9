#include "unate/oracle.hpp"

#include <stdexcept>

namespace unate {

FunctionOracle::FunctionOracle(std::size_t n, Evaluator evaluator, std::string description)
    : FunctionOracle(n, std::make_shared<const Evaluator>(std::move(evaluator)), nullptr,
                     std::move(description)) {}

FunctionOracle::FunctionOracle(std::size_t n, std::shared_ptr<const Evaluator> evaluator,
                               std::shared_ptr<const HypercubeFunction> table, std::string description)
    : n_(n), evaluator_(std::move(evaluator)), table_(std::move(table)), description_(std::move(description)) {
  if (n_ < 1 || n_ > kMaxOracleDimension) {
    throw std::invalid_argument("oracle dimension must be in [1, 64], got " + std::to_string(n_));
  }
  if (!evaluator_ || !*evaluator_) throw std::invalid_argument("oracle needs an evaluator");
}

FunctionOracle FunctionOracle::from_table(HypercubeFunction table, std::string description) {
  auto shared = std::make_shared<const HypercubeFunction>(std::move(table));
  const std::size_t n = shared->dimension();
  auto eval = std::make_shared<const Evaluator>(
      [t = shared](PointIndex x) { return (*t)(x); });
  return FunctionOracle(n, std::move(eval), std::move(shared), std::move(description));
}

FunctionOracle::FunctionOracle(FunctionOracle&& other) noexcept
    : n_(other.n_),
      evaluator_(std::move(other.evaluator_)),
      table_(std::move(other.table_)),
      description_(std::move(other.description_)),
      queries_(other.queries_.load(std::memory_order_relaxed)) {}

FunctionOracle& FunctionOracle::operator=(FunctionOracle&& other) noexcept {
  n_ = other.n_;
  evaluator_ = std::move(other.evaluator_);
  table_ = std::move(other.table_);
  description_ = std::move(other.description_);
  queries_.store(other.queries_.load(std::memory_order_relaxed), std::memory_order_relaxed);
  return *this;
}

RangeValue FunctionOracle::evaluate(PointIndex x) const {
  if (!point_in_range(x, n_)) {
    throw std::out_of_range("point " + std::to_string(x) + " outside {0,1}^" + std::to_string(n_));
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  return (*evaluator_)(x);
}

FunctionOracle FunctionOracle::fork() const {
  return FunctionOracle(n_, evaluator_, table_, description_);
}

HypercubeFunction tabulate(const FunctionOracle& oracle) {
  if (const auto* t = oracle.table()) return *t;
  const std::size_t n = oracle.dimension();
  if (n > kMaxTableDimension) {
    throw std::invalid_argument("cannot tabulate an oracle with n = " + std::to_string(n));
  }
  const auto view = oracle.fork();
  std::vector<RangeValue> values(std::size_t{1} << n);
  for (PointIndex x = 0; x < values.size(); ++x) values[x] = view.evaluate(x);
  return HypercubeFunction(n, std::move(values));
}

}  // namespace unate
