#include "psifrac/frac_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "composite.hpp"
#include "psifrac/errors.hpp"
#include "psifrac/specfun.hpp"

namespace psifrac {

using detail::Stage;

FracParams::FracParams(double mu_, double nu_) : mu(mu_), nu(nu_), xi(mu_ + nu_ * (1.0 - mu_)) {
  if (!(mu > 0.0 && mu <= 1.0)) throw std::invalid_argument("FracParams: mu must lie in (0, 1]");
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("FracParams: nu must lie in [0, 1]");
}

GridPtr make_grid(const PsiKernel& kernel, double a, double b, int n) {
  if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
  if (!(a < b)) throw std::invalid_argument("grid: need a < b");
  if (!kernel.domain().contains(a) || !kernel.domain().contains(b))
    throw std::invalid_argument("grid: [a, b] must lie inside the kernel domain");
  const double ta = kernel.eval(a);
  const double tb = kernel.eval(b);
  if (!(std::isfinite(ta) && std::isfinite(tb) && ta < tb))
    throw std::invalid_argument("grid: kernel must be finite and increasing on [a, b]");
  std::vector<double> tau(n + 1), x(n + 1);
  const double h = (tb - ta) / n;
  for (int j = 0; j <= n; ++j) {
    tau[j] = (j == n) ? tb : ta + j * h;
    x[j] = (j == 0) ? a : (j == n) ? b : kernel.inverse(tau[j]);
  }
  return std::make_shared<const TransformedGrid>(TransformedGrid{kernel, a, b, n, std::move(tau), std::move(x)});
}

SampledFunction::SampledFunction(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw std::invalid_argument("SampledFunction: null grid");
  if (values.size() != grid->size()) throw std::invalid_argument("SampledFunction: values length != node count");
  for (double y : values)
    if (!std::isfinite(y)) throw std::invalid_argument("SampledFunction: non-finite value");
}

SampledFunction sample(const GridPtr& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid->size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(grid->x_nodes[j]);
  return SampledFunction(grid, std::move(v));
}

SampledFunction sample_tau(const GridPtr& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid->size());
  const double t0 = grid->tau_nodes.front();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(j == 0 ? 0.0 : grid->tau_nodes[j] - t0);
  return SampledFunction(grid, std::move(v));
}

namespace {

void require_resolution(const SampledFunction& f, const char* what) {
  if (f.grid->n < 4) throw ResolutionError(std::string(what) + ": grid too coarse (n < 4)");
}

SampledFunction run_chain(const SampledFunction& f, const std::vector<Stage>& stages, Side side) {
  return SampledFunction(f.grid, detail::apply_chain(stages, f.values, f.grid->step(), side == Side::right));
}

// (m+1)^p − 2 m^p + (m−1)^p without cancellation, m >= 1
double second_difference(double m, double p) {
  return std::pow(m, p) * (std::expm1(p * std::log1p(1.0 / m)) + std::expm1(p * std::log1p(-1.0 / m)));
}

std::vector<double> product_trapezoid_left(std::span<const double> f, double alpha, double h) {
  const std::size_t n = f.size() - 1;
  const double p = alpha + 1.0;
  std::vector<double> mid(n + 1, 0.0);  // weight of f_{k−m}, 1 <= m < k
  for (std::size_t m = 1; m <= n; ++m) mid[m] = second_difference(static_cast<double>(m), p);
  const double scale = std::pow(h, alpha) / gamma(alpha + 2.0);
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    // (k−1)^{α+1} − (k−α−1) k^α
    const double w0 = std::pow(kd, p) * (std::expm1(p * std::log1p(-1.0 / kd)) + p / kd);
    double acc = w0 * f[0] + f[k];
    for (std::size_t j = 1; j < k; ++j) acc += mid[k - j] * f[j];
    out[k] = scale * acc;
  }
  return out;
}

}  // namespace

SampledFunction psi_integral(const SampledFunction& f, double p_mu, Side side) {
  if (!(p_mu > 0.0 && p_mu <= 2.0)) throw std::invalid_argument("psi_integral: order must lie in (0, 2]");
  const double h = f.grid->step();
  if (side == Side::left) return SampledFunction(f.grid, product_trapezoid_left(f.values, p_mu, h));
  std::vector<double> rev(f.values.rbegin(), f.values.rend());
  auto out = product_trapezoid_left(rev, p_mu, h);
  std::reverse(out.begin(), out.end());
  return SampledFunction(f.grid, std::move(out));
}

SampledFunction psi_integral_order1(const SampledFunction& f, Side side) {
  const double h = f.grid->step();
  const auto& v = f.values;
  std::vector<double> out(v.size(), 0.0);
  if (side == Side::left) {
    for (std::size_t k = 1; k < v.size(); ++k) out[k] = out[k - 1] + 0.5 * h * (v[k - 1] + v[k]);
  } else {
    for (std::size_t k = v.size() - 1; k-- > 0;) out[k] = out[k + 1] + 0.5 * h * (v[k] + v[k + 1]);
  }
  return SampledFunction(f.grid, std::move(out));
}

SampledFunction psi_rl_derivative(const SampledFunction& f, double p_mu, Side side) {
  if (!(p_mu > 0.0 && p_mu < 1.0)) throw std::invalid_argument("psi_rl_derivative: order must lie in (0, 1)");
  require_resolution(f, "psi_rl_derivative");
  return run_chain(f, {Stage::integrate(1.0 - p_mu), Stage::differentiate()}, side);
}

SampledFunction psi_hilfer_derivative(const SampledFunction& f, const FracParams& p, Side side) {
  require_resolution(f, "psi_hilfer_derivative");
  return run_chain(f, {Stage::integrate(p.gamma()), Stage::differentiate(), Stage::integrate(p.beta())}, side);
}

SampledFunction psi_frac_integral(const SampledFunction& f, const FracParams& p, Side side) {
  require_resolution(f, "psi_frac_integral");
  // right-sided data is reversed, so the mirrored ordering is built left-sided here
  const double first = side == Side::left ? p.beta() : p.gamma();
  const double last = side == Side::left ? p.gamma() : p.beta();
  return run_chain(f, detail::composite_integral_stages(first, last), side);
}

std::vector<double> psi_frac_integral_at(const SampledFunction& f, const FracParams& p, std::span<const double> xs) {
  require_resolution(f, "psi_frac_integral_at");
  const auto& g = *f.grid;
  detail::ChainEvaluator eval(detail::StageChain(detail::composite_integral_stages(p.beta(), p.gamma())),
                              static_cast<std::size_t>(g.n), g.step());
  const double span = g.tau_nodes.back() - g.tau_nodes.front();
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (x < g.a || x > g.b) throw std::invalid_argument("psi_frac_integral_at: point outside [a, b]");
    const double t = x == g.a ? 0.0 : x == g.b ? span : std::min(g.kernel.eval(x) - g.tau_nodes.front(), span);
    out.push_back(eval.evaluate(f.values, t));
  }
  return out;
}

double sup_norm(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

double sup_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw std::invalid_argument("sup_distance: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
  return m;
}

LimitProbeReport limit_probe(const SampledFunction& f, LimitRegime regime, int k_max) {
  if (k_max < 1) throw std::invalid_argument("limit_probe: k_max must be >= 1");
  LimitProbeReport report;
  const SampledFunction target = regime == LimitRegime::mu_to_1 ? psi_integral_order1(f) : f;
  for (int k = 1; k <= k_max; ++k) {
    const double eps = std::pow(10.0, -k);
    const FracParams p = regime == LimitRegime::mu_to_1 ? FracParams(1.0 - eps, 0.5) : FracParams(eps, 1.0 - eps);
    const auto out = psi_frac_integral(f, p);
    const std::span<const double> got(out.values);
    const std::span<const double> want(target.values);
    const double d = sup_distance(got.subspan(1), want.subspan(1));
    if (!report.steps.empty() && !(d < report.steps.back().distance || (d == 0.0 && report.steps.back().distance == 0.0)))
      report.monotone_decreasing = false;
    report.steps.push_back({p.mu, p.nu, d});
  }
  return report;
}

}  // namespace psifrac
