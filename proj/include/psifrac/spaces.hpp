#pragma once

#include "psifrac/frac_ops.hpp"
#include "psifrac/kernels.hpp"

namespace psifrac {

enum class Orientation { forward, complement };

/// Weight exponent w = ξ (forward) or 1 − ξ (complement).
struct WeightedNormSpec {
  double xi_weight = 0.0;
  Orientation orientation = Orientation::forward;

  double exponent() const noexcept { return orientation == Orientation::forward ? xi_weight : 1.0 - xi_weight; }
};

/// max over nodes x_j > a of |(Ψ(x_j)−Ψ(a))^w · f(x_j)|.
///
/// xi_weight must lie in [0, 1); the complement orientation also accepts 1
/// (weight exponent 0), which is what ξ = 1 operators need.
double weighted_norm(const SampledFunction& f, const WeightedNormSpec& spec);

/// sup|f| + sup|df/dτ|, derivative by second-order differences on the τ grid.
double battery_norm(const SampledFunction& f);

/// ΔΨ^{1+μ} / (Γ(1+ξ)Γ(2+μ−ξ))
double bound_constant_s(const FracParams& p, const PsiKernel& kernel, double a, double b);

/// ΔΨ^{1−μ} / (Γ(2−ξ)Γ(ξ−μ+1))
double bound_constant_K(const FracParams& p, const PsiKernel& kernel, double a, double b);

/// Γ(1−ν(1−μ))Γ(1+2ν(1−μ)+μ) / (Γ(1+ν(1−μ))·ΔΨ^{2−μ})
double bound_constant_A(const FracParams& p, const PsiKernel& kernel, double a, double b);

}  // namespace psifrac
