#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "doctest.h"
#include "psifrac/closed_forms.hpp"
#include "psifrac/errors.hpp"
#include "psifrac/specfun.hpp"

using namespace psifrac;

namespace {
const PsiKernel ident = make_kernel("identity", {0, 4});
}

TEST_CASE("power_integral") {
  PowerFunctionSpec one(1.0, ident, 0.0);
  CHECK(power_integral(one, 0.5, 1.0) == doctest::Approx(1.1283791671).epsilon(1e-10));
  CHECK(power_integral(one, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(power_integral(PowerFunctionSpec(1.5, ident, 0.0), 0.3, 0.0) == 0.0);
  CHECK_THROWS_AS(power_integral(one, 0.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(PowerFunctionSpec(0.0, ident, 0.0), std::invalid_argument);
}

TEST_CASE("power_hilfer_derivative") {
  PowerFunctionSpec s15(1.5, ident, 0.0), s1(1.0, ident, 0.0);
  CHECK(power_hilfer_derivative(s15, FracParams(0.5, 0.5), 1.0) == doctest::Approx(0.8862269255).epsilon(1e-10));
  CHECK(power_hilfer_derivative(s1, FracParams(0.5, 0.0), 1.0) == doctest::Approx(0.5641895835).epsilon(1e-10));
  const double mu = 0.37;
  PowerFunctionSpec s(mu + 1.0, ident, 0.0);
  for (double x : {0.0, 0.5, 3.0}) CHECK(power_hilfer_derivative(s, FracParams(mu, 0.2), x) == doctest::Approx(psifrac::gamma(1 + mu)));
  CHECK_THROWS_AS(power_hilfer_derivative(PowerFunctionSpec(0.5, ident, 0.0), FracParams(0.5, 0.5), 1.0), PoleError);
  CHECK_THROWS_AS(power_hilfer_derivative(s1, FracParams(0.5, 0.5), 0.0), std::domain_error);
}

TEST_CASE("power_psi_frac_integral") {
  PowerFunctionSpec s1(1.0, ident, 0.0);
  CHECK(power_psi_frac_integral(s1, FracParams(0.5, 0.5), 1.0) ==
        doctest::Approx(psifrac::gamma(1.25) / psifrac::gamma(0.75)).epsilon(1e-14));
  CHECK(power_psi_frac_integral(PowerFunctionSpec(1.5, ident, 0.0), FracParams(0.5, 0.5), 0.0) == 0.0);
  // frozen values at x = 1; not monotone in μ
  const double mus[] = {0.1, 0.3, 0.5, 0.8, 1.0};
  const double frozen[] = {0.6710332872937257, 0.675648227124608, 0.6759782400672847, 0.6713639030175622,
                           0.6666666666666666};
  double prev = INFINITY;
  for (int i = 0; i < 5; ++i) {
    PowerFunctionSpec s(1.5, ident, 0.0);
    CHECK(power_psi_frac_integral(s, FracParams(mus[i], 0.5), 1.0) == doctest::Approx(frozen[i]).epsilon(1e-14));
    double staged = power_psi_frac_integral_staged(s, FracParams(mus[i], 0.5), 1.0);
    CHECK(staged < prev);
    prev = staged;
  }
  CHECK(power_psi_frac_coefficient(1.5, FracParams(0.5, 0.5)) ==
        doctest::Approx(psifrac::gamma(1.5) * psifrac::gamma(1.75) / (psifrac::gamma(1.25) * psifrac::gamma(2.5))));
}

TEST_CASE("stage-composed psi_frac closed form") {
  PowerFunctionSpec s(2.0, ident, 0.0);
  for (double nu : {0.0, 0.4, 1.0})
    CHECK(power_psi_frac_integral_staged(s, FracParams(0.3, nu), 2.0) == doctest::Approx(power_integral(s, 0.3, 2.0)));
}

TEST_CASE("Mittag-Leffler oracles") {
  FracParams p(0.5, 0.5);
  CHECK(ml_hilfer_eigen(1.7, p, ident, 0.0, 0.0) == 1.7);
  CHECK(ml_hilfer_eigen(0.8, FracParams(1.0, 0.3), ident, 0.0, 1.5) == doctest::Approx(0.8 * std::exp(1.2)).epsilon(1e-14));
  CHECK(ml_hilfer_eigen(1.0, p, ident, 0.0, 1.0) == doctest::Approx(std::exp(1.0) * std::erfc(-1.0)).epsilon(1e-13));
  CHECK(ml_psi_frac_integral(p, ident, 0.0, 0.0) == 0.0);
  CHECK(ml_psi_frac_integral(FracParams(0.999, 0.5), ident, 0.0, 1.0) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-2));
  CHECK(ml_psi_frac_integral(p, ident, 0.0, 1.0) == doctest::Approx(std::exp(1.0) * std::erfc(-1.0) - 1).epsilon(1e-13));
}

TEST_CASE("composition_remainder") {
  CHECK(composition_remainder(0.0, FracParams(0.5, 0.5), ident, 0.0, 1.0) == 0.0);
  FracParams xi1(0.5, 1.0);
  CHECK(composition_remainder(2.0, xi1, ident, 0.0, 0.3) == doctest::Approx(2.0));
  CHECK(composition_remainder(2.0, xi1, ident, 0.0, 3.0) == doctest::Approx(2.0));
  CHECK(composition_remainder(1.0, FracParams(0.5, 0.5), ident, 0.0, 1.0) ==
        doctest::Approx(1.0 / psifrac::gamma(0.75)));
  CHECK_THROWS_AS(composition_remainder(1.0, xi1, ident, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("oracle semigroup and exponent identity") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ud(0.5, 3.0), um(0.05, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double delta = ud(rng), mu = um(rng), nu = um(rng), x = 0.5 + ud(rng);
    PowerFunctionSpec s(delta, ident, 0.0);
    // I^ν of c·t^{δ+μ−1} is c times the power rule with δ' = δ + μ
    const double c = psifrac::gamma(delta) / psifrac::gamma(delta + mu);
    const double composed = c * power_integral(PowerFunctionSpec(delta + mu, ident, 0.0), nu, x);
    CHECK(composed == doctest::Approx(power_integral(s, mu + nu, x)).epsilon(1e-12));
    FracParams p(mu, nu);
    CHECK(p.gamma() + p.beta() + delta == doctest::Approx(delta - mu + 1).epsilon(1e-14));
  }
}
