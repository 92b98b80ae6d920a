#pragma once

#include "psifrac/frac_ops.hpp"
#include "psifrac/kernels.hpp"

namespace psifrac {

/// f(x) = (Ψ(x) − Ψ(a))^{δ−1}.
struct PowerFunctionSpec {
  double delta;
  PsiKernel kernel;
  double a;

  PowerFunctionSpec(double delta, PsiKernel kernel, double a);
  double base(double x) const;  // Ψ(x) − Ψ(a), x >= a
  double operator()(double x) const;
};

/// Γ(δ)/Γ(μ+δ)·(Ψ(x)−Ψ(a))^{μ+δ−1}
double power_integral(const PowerFunctionSpec& spec, double p_mu, double x);

/// Γ(δ)/Γ(δ−μ)·(Ψ(x)−Ψ(a))^{δ−μ−1}, independent of ν. PoleError when δ−μ is a
/// nonpositive integer.
double power_hilfer_derivative(const PowerFunctionSpec& spec, const FracParams& p, double x);

/// Γ(δ)Γ(δ+β) / (Γ(δ−β)Γ(δ+2β+μ)) with β = ν(1−μ).
double power_psi_frac_coefficient(double delta, const FracParams& p);

/// power_psi_frac_coefficient · (Ψ(x)−Ψ(a))^{δ−μ+1}.
double power_psi_frac_integral(const PowerFunctionSpec& spec, const FracParams& p, double x);

/// Image of the power function under D^{(1−ν)(1−μ)} I¹ D^{ν(1−μ)}, composing
/// the power-rule for each stage: Γ(δ)/Γ(δ+μ)·(Ψ(x)−Ψ(a))^{δ+μ−1}.
double power_psi_frac_integral_staged(const PowerFunctionSpec& spec, const FracParams& p, double x);

/// E_μ[λ(Ψ(x)−Ψ(a))^μ]
double ml_function(double lambda, double mu, const PsiKernel& kernel, double a, double x);

/// λ·E_μ[λ(Ψ(x)−Ψ(a))^μ]
double ml_hilfer_eigen(double lambda, const FracParams& p, const PsiKernel& kernel, double a, double x);

/// E_μ[(Ψ(x)−Ψ(a))^μ] − 1
double ml_psi_frac_integral(const FracParams& p, const PsiKernel& kernel, double a, double x);

/// (Ψ(x)−Ψ(a))^{ξ−1}/Γ(ξ) · f_at_a_integral
double composition_remainder(double f_at_a_integral, const FracParams& p, const PsiKernel& kernel, double a,
                             double x);

}  // namespace psifrac
