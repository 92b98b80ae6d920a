#pragma once

#include "psifrac/frac_ops.hpp"
#include "psifrac/kernels.hpp"

namespace psifrac {

/// Fractional Malthus model ᴴD^{μ,ν;Ψ}N = λN, N(0) = N₀, on [0, horizon].
/// λ may be negative (decay).
struct MalthusSpec {
  double n0;
  double lambda;
  FracParams p;
  PsiKernel kernel;
  double horizon;

  MalthusSpec(double n0, double lambda, FracParams p, PsiKernel kernel, double horizon);
};

/// N₀·E_μ(λ(Ψ(t)−Ψ(0))^μ)
double malthus_solution(const MalthusSpec& spec, double t);

struct MalthusResidual {
  double residual;   // weighted sup of ᴴD N − λN, weight exponent 1 − ξ
  double reference;  // same weighted sup of λN
};

/// Samples N on n_grid subintervals of [0, horizon] and applies the discrete
/// Hilfer derivative. n_grid must be >= 64.
MalthusResidual malthus_residual(const MalthusSpec& spec, int n_grid);

}  // namespace psifrac
