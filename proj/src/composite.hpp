#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace psifrac::detail {

// A chain of Riemann-Liouville stages applied right to left in the order given:
// integrate(α) multiplies by the fractional integral of order α, differentiate
// is d/dτ. Each stage acts exactly on the piecewise-linear interpolant of the
// input, written as f0 + Σ c_j (τ − τ_j)_+ . Both basis pieces stay power
// functions, so the chain reduces to two (coefficient, exponent) pairs.
struct Stage {
  enum class Kind { integrate, differentiate };
  Kind kind;
  double order;

  static Stage integrate(double alpha) { return {Kind::integrate, alpha}; }
  static Stage differentiate() { return {Kind::differentiate, 1.0}; }
};

class StageChain {
 public:
  explicit StageChain(std::span<const Stage> stages);

  double ramp_power() const noexcept { return ramp_power_; }
  double ramp_coef() const noexcept { return ramp_coef_; }
  bool constant_alive() const noexcept { return const_alive_; }
  double constant_power() const noexcept { return const_power_; }
  double constant_coef() const noexcept { return const_coef_; }

 private:
  double ramp_power_ = 1.0;
  double ramp_coef_ = 1.0;
  double const_power_ = 0.0;
  double const_coef_ = 1.0;
  bool const_alive_ = true;
};

// Evaluates a chain on a uniform grid of n subintervals with step h
// (left-sided, origin at node 0). Power tables are built once.
class ChainEvaluator {
 public:
  ChainEvaluator(const StageChain& chain, std::size_t n, double h);

  // All n+1 node values. Node 0 is linearly extrapolated from nodes 1, 2
  // when the exact value is infinite.
  std::vector<double> apply(std::span<const double> values) const;

  // Value at node k, reading values[0..k] only.
  double apply_at(std::span<const double> values, std::size_t k) const;

  // Value at τ − τ_0 = t for any t in [0, n·h].
  double evaluate(std::span<const double> values, double t) const;

 private:
  double constant_part(double f0, std::size_t k) const;
  void slopes(std::span<const double> values, std::size_t upto, std::vector<double>& c) const;

  StageChain chain_;
  std::size_t n_;
  double h_;
  std::vector<double> ramp_table_;   // Kr · (m h)^{pr}, m = 0..n
  std::vector<double> const_table_;  // K0 · (k h)^{p0}, k = 0..n
};

// D^{last} ∘ I¹ ∘ D^{first}, each D^{q} = d/dτ ∘ I^{1−q}; order-0 factors dropped.
std::vector<Stage> composite_integral_stages(double first, double last);

// Applies a left-sided chain on the reversed data when side is right.
std::vector<double> apply_chain(std::span<const Stage> stages, std::span<const double> values, double h, bool right);

}  // namespace psifrac::detail
