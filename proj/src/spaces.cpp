#include "psifrac/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "psifrac/specfun.hpp"

namespace psifrac {

namespace {

double delta_psi(const PsiKernel& kernel, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("bound constant: need a < b");
  return kernel.eval(b) - kernel.eval(a);
}

}  // namespace

double weighted_norm(const SampledFunction& f, const WeightedNormSpec& spec) {
  const double top = spec.orientation == Orientation::complement ? 1.0 : 0.0;
  if (!(spec.xi_weight >= 0.0 && (spec.xi_weight < 1.0 || spec.xi_weight <= top)))
    throw std::invalid_argument("weighted_norm: xi_weight out of range");
  const double w = spec.exponent();
  const auto tau = f.tau();
  double m = 0.0;
  for (std::size_t j = 1; j < tau.size(); ++j) {
    const double weight = w == 0.0 ? 1.0 : std::pow(tau[j] - tau[0], w);
    m = std::max(m, std::abs(weight * f.values[j]));
  }
  return m;
}

double battery_norm(const SampledFunction& f) {
  const auto& v = f.values;
  const std::size_t n = v.size() - 1;
  const double h = f.grid->step();
  double dmax = 0.0;
  if (n == 1) {
    dmax = std::abs(v[1] - v[0]) / h;
  } else {
    dmax = std::max(std::abs(-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h),
                    std::abs(3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h));
    for (std::size_t j = 1; j < n; ++j) dmax = std::max(dmax, std::abs(v[j + 1] - v[j - 1]) / (2.0 * h));
  }
  return sup_norm(v) + dmax;
}

double bound_constant_s(const FracParams& p, const PsiKernel& kernel, double a, double b) {
  return std::pow(delta_psi(kernel, a, b), 1.0 + p.mu) / (gamma(1.0 + p.xi) * gamma(2.0 + p.mu - p.xi));
}

double bound_constant_K(const FracParams& p, const PsiKernel& kernel, double a, double b) {
  return std::pow(delta_psi(kernel, a, b), 1.0 - p.mu) / (gamma(2.0 - p.xi) * gamma(p.xi - p.mu + 1.0));
}

double bound_constant_A(const FracParams& p, const PsiKernel& kernel, double a, double b) {
  const double bt = p.beta();
  return gamma(1.0 - bt) * gamma(1.0 + 2.0 * bt + p.mu) /
         (gamma(1.0 + bt) * std::pow(delta_psi(kernel, a, b), 2.0 - p.mu));
}

}  // namespace psifrac
