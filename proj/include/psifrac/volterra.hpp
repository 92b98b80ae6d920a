#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "psifrac/frac_ops.hpp"
#include "psifrac/kernels.hpp"

namespace psifrac {

/// W(t, s, x)
using Integrand = std::function<double(double, double, double)>;

/// x(t) = φ(t) + I^{μ,ν;Ψ}[W(t, s, x(s))] on [a, b].
///
/// The outer variable t of W is frozen at each evaluation node. Set
/// integrand_depends_on_t = false when W ignores t; the solver then applies
/// the operator once per iterate instead of once per row.
struct VolterraProblem {
  RealFn phi;
  Integrand integrand;
  FracParams p;
  PsiKernel kernel;
  double a;
  double b;
  int n;
  bool integrand_depends_on_t = true;
};

struct PicardTrace {
  std::vector<SampledFunction> iterates;  // x_0, x_1, ..., x_iterations
  std::vector<double> sup_diffs;          // ‖x_k − x_{k−1}‖_sup, k = 1..iterations
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  // ‖x − (φ + I[W(·,·,x)])‖_sup at the final iterate
};

/// Picard iteration from x0 (φ when absent). Stops when sup_diff <= tol or
/// after max_iter steps (converged = false). Throws DivergenceError when W
/// returns a non-finite value or an iterate exceeds 1e12 in sup norm.
PicardTrace picard_solve(const VolterraProblem& problem, double tol, int max_iter,
                         const std::optional<SampledFunction>& x0 = std::nullopt);

struct ContractionReport {
  double A;
  double factor;  // lipschitz_est / A
  bool contractive;
};

ContractionReport contraction_report(const VolterraProblem& problem, double lipschitz_est);

}  // namespace psifrac
