#include "psifrac/models.hpp"

#include <stdexcept>
#include <utility>

#include "psifrac/closed_forms.hpp"
#include "psifrac/spaces.hpp"

namespace psifrac {

MalthusSpec::MalthusSpec(double n0_, double lambda_, FracParams p_, PsiKernel kernel_, double horizon_)
    : n0(n0_), lambda(lambda_), p(p_), kernel(std::move(kernel_)), horizon(horizon_) {
  if (!(n0 > 0.0)) throw std::invalid_argument("MalthusSpec: n0 must be > 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("MalthusSpec: horizon must be > 0");
  if (!kernel.domain().contains(0.0) || !kernel.domain().contains(horizon))
    throw std::invalid_argument("MalthusSpec: kernel domain must contain [0, horizon]");
}

double malthus_solution(const MalthusSpec& spec, double t) {
  if (!(t >= 0.0 && t <= spec.horizon)) throw std::invalid_argument("malthus_solution: t outside [0, horizon]");
  return spec.n0 * ml_function(spec.lambda, spec.p.mu, spec.kernel, 0.0, t);
}

MalthusResidual malthus_residual(const MalthusSpec& spec, int n_grid) {
  if (n_grid < 64) throw std::invalid_argument("malthus_residual: n_grid must be >= 64");
  auto grid = make_grid(spec.kernel, 0.0, spec.horizon, n_grid);
  auto N = sample(grid, [&spec](double t) { return malthus_solution(spec, t); });
  auto dN = psi_hilfer_derivative(N, spec.p);
  std::vector<double> diff(N.values.size()), lam(N.values.size());
  for (std::size_t j = 0; j < diff.size(); ++j) {
    lam[j] = spec.lambda * N.values[j];
    diff[j] = dN.values[j] - lam[j];
  }
  const WeightedNormSpec w{spec.p.xi, Orientation::complement};
  return {weighted_norm(SampledFunction(grid, std::move(diff)), w),
          weighted_norm(SampledFunction(grid, std::move(lam)), w)};
}

}  // namespace psifrac
