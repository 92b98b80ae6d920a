#include "psifrac/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "psifrac/errors.hpp"
#include "psifrac/specfun.hpp"

namespace psifrac {

namespace {

double tau_offset(const PsiKernel& kernel, double a, double x) {
  if (x < a) throw std::invalid_argument("closed form: need x >= a");
  return x == a ? 0.0 : kernel.eval(x) - kernel.eval(a);
}

// c·t^e with t >= 0; the x = a limit is reported as an error when it is infinite
double scaled_power(double c, double t, double e) {
  if (t == 0.0) {
    if (e > 0.0) return 0.0;
    if (e == 0.0) return c;
    throw std::domain_error("closed form: value is singular at x = a");
  }
  return c * std::pow(t, e);
}

}  // namespace

PowerFunctionSpec::PowerFunctionSpec(double delta_, PsiKernel kernel_, double a_)
    : delta(delta_), kernel(std::move(kernel_)), a(a_) {
  if (!(delta > 0.0)) throw std::invalid_argument("PowerFunctionSpec: delta must be > 0");
}

double PowerFunctionSpec::base(double x) const { return tau_offset(kernel, a, x); }

double PowerFunctionSpec::operator()(double x) const { return scaled_power(1.0, base(x), delta - 1.0); }

double power_integral(const PowerFunctionSpec& spec, double p_mu, double x) {
  if (!(p_mu > 0.0)) throw std::invalid_argument("power_integral: order must be > 0");
  const double c = gamma(spec.delta) / gamma(p_mu + spec.delta);
  return scaled_power(c, spec.base(x), p_mu + spec.delta - 1.0);
}

double power_hilfer_derivative(const PowerFunctionSpec& spec, const FracParams& p, double x) {
  const double c = gamma(spec.delta) / gamma(spec.delta - p.mu);
  return scaled_power(c, spec.base(x), spec.delta - p.mu - 1.0);
}

double power_psi_frac_coefficient(double delta, const FracParams& p) {
  const double b = p.beta();
  return gamma(delta) * gamma(delta + b) / (gamma(delta - b) * gamma(delta + 2.0 * b + p.mu));
}

double power_psi_frac_integral(const PowerFunctionSpec& spec, const FracParams& p, double x) {
  return scaled_power(power_psi_frac_coefficient(spec.delta, p), spec.base(x), spec.delta - p.mu + 1.0);
}

double power_psi_frac_integral_staged(const PowerFunctionSpec& spec, const FracParams& p, double x) {
  return power_integral(spec, p.mu, x);
}

double ml_function(double lambda, double mu, const PsiKernel& kernel, double a, double x) {
  const double t = tau_offset(kernel, a, x);
  return mittag_leffler(mu, lambda * std::pow(t, mu));
}

double ml_hilfer_eigen(double lambda, const FracParams& p, const PsiKernel& kernel, double a, double x) {
  return lambda * ml_function(lambda, p.mu, kernel, a, x);
}

double ml_psi_frac_integral(const FracParams& p, const PsiKernel& kernel, double a, double x) {
  return ml_function(1.0, p.mu, kernel, a, x) - 1.0;
}

double composition_remainder(double f_at_a_integral, const FracParams& p, const PsiKernel& kernel, double a,
                             double x) {
  if (!(x > a)) throw std::invalid_argument("composition_remainder: need x > a");
  if (f_at_a_integral == 0.0) return 0.0;
  return scaled_power(f_at_a_integral / gamma(p.xi), tau_offset(kernel, a, x), p.xi - 1.0);
}

}  // namespace psifrac
