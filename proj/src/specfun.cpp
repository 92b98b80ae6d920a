#include "psifrac/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "psifrac/errors.hpp"

namespace psifrac {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

void check(const MLParams& p) {
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) throw std::invalid_argument("mittag_leffler: alpha must be >= 0");
  if (!(p.beta > 0.0) || !std::isfinite(p.beta)) throw std::invalid_argument("mittag_leffler: beta must be > 0");
  if (!(p.tol > 0.0)) throw std::invalid_argument("mittag_leffler: tol must be > 0");
  if (p.max_terms < 1) throw std::invalid_argument("mittag_leffler: max_terms must be >= 1");
}

// c · z^k / Γ(arg), switching to logs once Γ would overflow.
double ratio_term(double c, double z, double k, double arg) {
  if (arg <= 170.0) return c * std::pow(z, k) / std::tgamma(arg);
  if (z == 0.0) return 0.0;
  double sign = (z < 0.0 && std::fmod(k, 2.0) != 0.0) ? -1.0 : 1.0;
  return sign * c * std::exp(k * std::log(std::abs(z)) - std::lgamma(arg));
}

}  // namespace

double gamma(double x) {
  if (std::isnan(x)) throw std::invalid_argument("gamma: NaN argument");
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x), x);
  if (x > 0.0) {
    // exact factorials while n! is representable
    if (x <= 23.0 && std::floor(x) == x) {
      double f = 1.0;
      for (int k = 2; k < static_cast<int>(x); ++k) f *= k;
      return f;
    }
    return std::tgamma(x);
  }
  // reflection: Γ(x)Γ(1−x) = π / sin(πx)
  const double s = std::sin(std::numbers::pi * (x - 2.0 * std::floor(0.5 * x)));
  return std::numbers::pi / (s * std::tgamma(1.0 - x));
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma(x);
}

MLResult mittag_leffler_series(const MLParams& params, double z) {
  check(params);
  if (params.alpha == 0.0) {
    if (!(std::abs(z) < 1.0))
      throw DivergenceError("mittag_leffler: alpha = 0 needs |z| < 1, got z = " + std::to_string(z));
    return {1.0 / (gamma(params.beta) * (1.0 - z)), 1};
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < params.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double term = ratio_term(1.0, z, kd, params.alpha * kd + params.beta);
    sum += term;
    if (!std::isfinite(sum)) throw DivergenceError("mittag_leffler: partial sum overflowed");
    if (k >= 5 && std::abs(term) <= params.tol * std::abs(sum)) return {sum, k + 1};
  }
  throw NonConvergenceError("mittag_leffler: max_terms exhausted", sum, params.max_terms);
}

double mittag_leffler(double mu, double z) { return mittag_leffler_series(MLParams{mu, 1.0}, z).value; }

MLResult mittag_leffler_derivative(const MLParams& params, double z) {
  check(params);
  if (params.alpha == 0.0) {
    if (!(std::abs(z) < 1.0)) throw DivergenceError("mittag_leffler_derivative: alpha = 0 needs |z| < 1");
    return {1.0 / (gamma(params.beta) * (1.0 - z) * (1.0 - z)), 1};
  }
  double sum = 0.0;
  for (std::size_t k = 1; k < params.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double term = ratio_term(kd, z, kd - 1.0, params.alpha * kd + params.beta);
    sum += term;
    if (!std::isfinite(sum)) throw DivergenceError("mittag_leffler_derivative: partial sum overflowed");
    if (k >= 5 && std::abs(term) <= params.tol * std::abs(sum)) return {sum, k};
  }
  throw NonConvergenceError("mittag_leffler_derivative: max_terms exhausted", sum, params.max_terms);
}

}  // namespace psifrac
