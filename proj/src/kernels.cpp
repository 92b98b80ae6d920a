#include "psifrac/kernels.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace psifrac {

PsiKernel::PsiKernel(std::string name, RealFn eval, RealFn deriv, RealFn inverse, Domain domain)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      deriv_(std::move(deriv)),
      inverse_(std::move(inverse)),
      domain_(domain) {
  if (!eval_ || !deriv_ || !inverse_) throw std::invalid_argument("kernel: eval, deriv and inverse are required");
  if (!(std::isfinite(domain_.lo) && std::isfinite(domain_.hi)) || !(domain_.lo < domain_.hi))
    throw std::invalid_argument("kernel: domain must be a finite interval with lo < hi");
}

namespace {

void expect_params(std::string_view family, const std::vector<double>& params, std::size_t count) {
  if (params.size() != count)
    throw std::invalid_argument("kernel " + std::string(family) + ": expected " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(params.size()));
}

std::string format_param(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

PsiKernel make_builtin(std::string_view family, const std::vector<double>& params, Domain domain) {
  if (!(domain.lo < domain.hi)) throw std::invalid_argument("kernel: domain must satisfy lo < hi");

  if (family == "identity") {
    expect_params(family, params, 0);
    return PsiKernel(
        "identity", [](double x) { return x; }, [](double) { return 1.0; }, [](double u) { return u; }, domain);
  }
  if (family == "sqrt_shift") {
    expect_params(family, params, 1);
    const double c = params[0];
    if (!std::isfinite(c)) throw std::invalid_argument("kernel sqrt_shift: shift must be finite");
    if (!(domain.lo + c > 0.0))
      throw std::invalid_argument("kernel sqrt_shift: domain must satisfy x + c > 0 (derivative unbounded at -c)");
    return PsiKernel(
        "sqrt_shift:" + format_param(c), [c](double x) { return std::sqrt(x + c); },
        [c](double x) { return 0.5 / std::sqrt(x + c); }, [c](double u) { return u * u - c; }, domain);
  }
  if (family == "log") {
    expect_params(family, params, 0);
    if (!(domain.lo > 0.0)) throw std::invalid_argument("kernel log: domain must satisfy x_lo > 0");
    return PsiKernel(
        "log", [](double x) { return std::log(x); }, [](double x) { return 1.0 / x; },
        [](double u) { return std::exp(u); }, domain);
  }
  if (family == "exp") {
    expect_params(family, params, 0);
    return PsiKernel(
        "exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
        [](double u) { return std::log(u); }, domain);
  }
  if (family == "power") {
    expect_params(family, params, 1);
    const double p = params[0];
    if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("kernel power: exponent must be > 0");
    if (p != 1.0 && !(domain.lo > 0.0))
      throw std::invalid_argument("kernel power: domain must satisfy x_lo > 0 unless p = 1");
    if (p == 1.0 && domain.lo < 0.0) throw std::invalid_argument("kernel power: domain must satisfy x_lo >= 0");
    return PsiKernel(
        "power:" + format_param(p), [p](double x) { return std::pow(x, p); },
        [p](double x) { return p * std::pow(x, p - 1.0); }, [p](double u) { return std::pow(u, 1.0 / p); },
        domain);
  }
  throw std::invalid_argument("unknown kernel family '" + std::string(family) + "'");
}

PsiKernel make_kernel(std::string_view id, Domain domain) {
  auto colon = id.find(':');
  std::string_view family = id.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = id.substr(colon + 1);
    while (true) {
      auto next = rest.find(':');
      params.push_back(parse_double(rest.substr(0, next), "kernel parameter"));
      if (next == std::string_view::npos) break;
      rest = rest.substr(next + 1);
    }
  }
  return make_builtin(family, params, domain);
}

std::string_view to_string(KernelViolation::Kind kind) {
  switch (kind) {
    case KernelViolation::Kind::monotonicity: return "monotonicity";
    case KernelViolation::Kind::derivative_sign: return "derivative_sign";
    case KernelViolation::Kind::derivative_mismatch: return "derivative_mismatch";
    case KernelViolation::Kind::inverse_round_trip: return "inverse_round_trip";
  }
  return "unknown";
}

KernelReport validate(const PsiKernel& kernel, int n_samples) {
  if (n_samples < 3) throw std::invalid_argument("validate: n_samples must be >= 3");
  const auto& dom = kernel.domain();
  const double spacing = (dom.hi - dom.lo) / (n_samples - 1);
  std::vector<double> xs(n_samples), ys(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    xs[i] = (i == n_samples - 1) ? dom.hi : dom.lo + i * spacing;
    ys[i] = kernel.eval(xs[i]);
  }

  KernelReport report;
  using Kind = KernelViolation::Kind;
  for (int i = 1; i + 1 < n_samples; ++i) {
    if (!(ys[i - 1] < ys[i] && ys[i] < ys[i + 1])) report.violations.push_back({Kind::monotonicity, xs[i], ys[i]});
  }

  for (int i = 0; i < n_samples; ++i) {
    const double x = xs[i];
    const double d = kernel.deriv(x);
    if (!(d > 0.0) || !std::isfinite(d)) report.violations.push_back({Kind::derivative_sign, x, d});

    if (i > 0 && i + 1 < n_samples) {
      const double step = std::min(1e-5 * std::max(1.0, std::abs(x)), 0.5 * spacing);
      const double fd = (kernel.eval(x + step) - kernel.eval(x - step)) / (2.0 * step);
      const double mismatch = std::abs(fd - d) / std::max(std::abs(d), 1e-300);
      report.max_derivative_mismatch = std::max(report.max_derivative_mismatch, mismatch);
      if (!(mismatch <= 1e-6)) report.violations.push_back({Kind::derivative_mismatch, x, mismatch});
    }

    const double rt = std::abs(kernel.inverse(ys[i]) - x);
    report.max_round_trip_error = std::max(report.max_round_trip_error, rt);
    if (!(rt <= 1e-10 * (1.0 + std::abs(x)))) report.violations.push_back({Kind::inverse_round_trip, x, rt});
  }
  return report;
}

}  // namespace psifrac
