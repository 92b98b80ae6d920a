#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psifrac {

/// Gamma evaluated at (or a closed form that hits) a pole at a nonpositive integer.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, double at) : std::domain_error(what), at_(at) {}
  double at() const noexcept { return at_; }

 private:
  double at_;
};

/// A series ran out of terms before its truncation rule fired.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double partial_sum, std::size_t terms)
      : std::runtime_error(what), partial_sum_(partial_sum), terms_(terms) {}
  double partial_sum() const noexcept { return partial_sum_; }
  std::size_t terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  std::size_t terms_;
};

/// A series or iteration that provably (or numerically) diverges.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid too coarse for the requested operator.
class ResolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace psifrac
