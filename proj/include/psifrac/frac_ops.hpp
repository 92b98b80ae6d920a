#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "psifrac/kernels.hpp"

namespace psifrac {

/// Order μ and type ν of the Hilfer-type operators; ξ = μ + ν(1−μ).
///
/// μ = 1 is accepted as the classical limit (both inner orders vanish).
struct FracParams {
  double mu;
  double nu;
  double xi;

  FracParams(double mu, double nu);

  /// ν(1−μ): order of the outer integral in the Hilfer factorization.
  double beta() const noexcept { return nu * (1.0 - mu); }
  /// (1−ν)(1−μ): order of the inner integral in the Hilfer factorization.
  double gamma() const noexcept { return (1.0 - nu) * (1.0 - mu); }
};

enum class Side { left, right };

/// Nodes uniform in τ = Ψ(x) over [a, b].
struct TransformedGrid {
  PsiKernel kernel;
  double a;
  double b;
  int n;
  std::vector<double> tau_nodes;
  std::vector<double> x_nodes;

  double step() const noexcept { return (tau_nodes.back() - tau_nodes.front()) / n; }
  std::size_t size() const noexcept { return tau_nodes.size(); }
};

using GridPtr = std::shared_ptr<const TransformedGrid>;

/// Throws std::invalid_argument unless a < b lie in the kernel domain and n >= 1.
GridPtr make_grid(const PsiKernel& kernel, double a, double b, int n);

struct SampledFunction {
  GridPtr grid;
  std::vector<double> values;

  SampledFunction(GridPtr grid, std::vector<double> values);

  std::span<const double> tau() const { return grid->tau_nodes; }
  std::span<const double> x() const { return grid->x_nodes; }
};

/// Samples fn(x_j) on the grid.
SampledFunction sample(const GridPtr& grid, const std::function<double(double)>& fn);

/// Samples fn(τ_j − τ_0), i.e. a function of Ψ(x) − Ψ(a).
SampledFunction sample_tau(const GridPtr& grid, const std::function<double(double)>& fn);

/// Ψ-Riemann-Liouville integral of order 0 < p_mu <= 2 by product trapezoid.
SampledFunction psi_integral(const SampledFunction& f, double p_mu, Side side = Side::left);

/// Cumulative trapezoid in τ.
SampledFunction psi_integral_order1(const SampledFunction& f, Side side = Side::left);

/// Ψ-Riemann-Liouville derivative, 0 < p_mu < 1. ResolutionError when n < 4.
SampledFunction psi_rl_derivative(const SampledFunction& f, double p_mu, Side side = Side::left);

/// Ψ-Hilfer derivative I^{ν(1−μ)} ∘ d/dτ ∘ I^{(1−ν)(1−μ)}.
SampledFunction psi_hilfer_derivative(const SampledFunction& f, const FracParams& p, Side side = Side::left);

/// The composed Ψ-fractional integral D^{(1−ν)(1−μ)} ∘ I¹ ∘ D^{ν(1−μ)} (left),
/// D^{ν(1−μ)} ∘ I¹ ∘ D^{(1−ν)(1−μ)} (right).
SampledFunction psi_frac_integral(const SampledFunction& f, const FracParams& p, Side side = Side::left);

/// Left-sided psi_frac_integral of the τ-interpolant of f evaluated at arbitrary
/// points xs in [a, b] (not only at nodes).
std::vector<double> psi_frac_integral_at(const SampledFunction& f, const FracParams& p, std::span<const double> xs);

enum class LimitRegime { mu_to_1, identity };

struct LimitProbeStep {
  double mu;
  double nu;
  double distance;
};

struct LimitProbeReport {
  std::vector<LimitProbeStep> steps;
  bool monotone_decreasing = true;
};

/// Runs psi_frac_integral along μ = 1 − 10^{-k} (ν = 0.5), or along
/// μ = 10^{-k}, ν = 1 − 10^{-k}, for k = 1..k_max, and reports the sup
/// distance over nodes x > a to I¹f or to f respectively.
LimitProbeReport limit_probe(const SampledFunction& f, LimitRegime regime, int k_max = 3);

/// Sup over all nodes of |u − v| (same grid size required).
double sup_distance(std::span<const double> u, std::span<const double> v);
double sup_norm(std::span<const double> u);

}  // namespace psifrac
