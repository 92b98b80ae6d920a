#pragma once

#include <cstddef>

namespace psifrac {

/// Γ(x). Reflection for negative non-integers; PoleError at 0, −1, −2, ...
double gamma(double x);

/// 1/Γ(x), which is 0 at the poles instead of throwing.
double rgamma(double x);

struct MLParams {
  double alpha = 1.0;
  double beta = 1.0;
  double tol = 1e-16;
  std::size_t max_terms = 10000;
};

struct MLResult {
  double value = 0.0;
  std::size_t terms = 0;
};

/// Two-parameter Mittag-Leffler E_{α,β}(z) by direct summation.
///
/// Stops at term k when |term_k| <= tol·|partial sum| and k >= 5.
/// alpha = 0 is the geometric case 1/(Γ(β)(1−z)), valid only for |z| < 1.
/// Throws NonConvergenceError (with the partial sum) when max_terms runs out,
/// DivergenceError for alpha = 0 and |z| >= 1.
MLResult mittag_leffler_series(const MLParams& params, double z);

inline double mittag_leffler(const MLParams& params, double z) { return mittag_leffler_series(params, z).value; }

/// E_μ(z) = E_{μ,1}(z).
double mittag_leffler(double mu, double z);

/// d/dz E_{α,β}(z), summed term by term with the same truncation rule.
MLResult mittag_leffler_derivative(const MLParams& params, double z);

}  // namespace psifrac
