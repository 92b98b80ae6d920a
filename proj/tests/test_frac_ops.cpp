#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include "composite.hpp"
#include "doctest.h"
#include "psifrac/closed_forms.hpp"
#include "psifrac/errors.hpp"
#include "psifrac/frac_ops.hpp"
#include "psifrac/specfun.hpp"

using namespace psifrac;

namespace {

GridPtr unit_grid(int n, const char* id = "identity", double a = 0.0, double b = 1.0) {
  return make_grid(make_kernel(id, {a, b}), a, b, n);
}

SampledFunction sin_of_tau(const GridPtr& g) {
  return sample_tau(g, [](double t) { return std::sin(t); });
}

// sup over nodes j >= skip of |u − v| relative to sup |v|
double rel_sup(const SampledFunction& u, const SampledFunction& v, std::size_t skip = 2) {
  double e = 0, m = 0;
  for (std::size_t j = skip; j < u.values.size(); ++j) {
    e = std::max(e, std::abs(u.values[j] - v.values[j]));
    m = std::max(m, std::abs(v.values[j]));
  }
  return e / m;
}

SampledFunction map(const SampledFunction& f, double (*fn)(double, double), const SampledFunction& g) {
  std::vector<double> v(f.values.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(f.values[j], g.values[j]);
  return SampledFunction(f.grid, v);
}

}  // namespace

TEST_CASE("FracParams") {
  FracParams p(0.5, 0.5);
  CHECK(p.xi == 0.75);
  CHECK(p.beta() == 0.25);
  CHECK(p.gamma() == 0.25);
  CHECK(p.mu <= p.xi);
  CHECK(p.xi <= 1.0);
  CHECK(FracParams(1.0, 0.3).xi == 1.0);
  CHECK_THROWS_AS(FracParams(0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FracParams(1.2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(FracParams(0.5, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(FracParams(0.5, 1.1), std::invalid_argument);
}

TEST_CASE("transformed grid") {
  auto k = make_kernel("sqrt_shift:1", {0, 3});
  auto g = make_grid(k, 0, 3, 64);
  CHECK(g->tau_nodes.front() == k(0));
  CHECK(g->tau_nodes.back() == k(3));
  CHECK(g->x_nodes.front() == 0.0);
  CHECK(g->x_nodes.back() == 3.0);
  for (int j = 0; j < 64; ++j) {
    CHECK(g->tau_nodes[j + 1] - g->tau_nodes[j] == doctest::Approx(g->step()).epsilon(1e-12));
    CHECK(g->x_nodes[j] < g->x_nodes[j + 1]);
  }
  CHECK_THROWS_AS(make_grid(k, 1, 1, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(k, 0, 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(k, 0, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction(g, {1.0, 2.0}), std::invalid_argument);
  std::vector<double> bad(65, 0.0);
  bad[3] = NAN;
  CHECK_THROWS_AS(SampledFunction(g, bad), std::invalid_argument);
}

TEST_CASE("psi_integral examples") {
  auto g = unit_grid(64);
  auto zero = sample(g, [](double) { return 0.0; });
  for (double v : psi_integral(zero, 0.5).values) CHECK(v == 0.0);
  auto one = sample(g, [](double) { return 1.0; });
  auto r = psi_integral(one, 0.5);
  CHECK(r.values.front() == 0.0);
  CHECK(r.values.back() == doctest::Approx(1.1283791671).epsilon(1e-10));
  CHECK(psi_integral(one, 1.0).values.back() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(psi_integral(one, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(psi_integral(one, 2.5), std::invalid_argument);
}

TEST_CASE("psi_integral is exact on piecewise-linear data and matches the stage engine") {
  auto g = unit_grid(256, "sqrt_shift:1", 0, 3);
  auto lin = sample_tau(g, [](double t) { return 2.0 + 3.0 * t; });
  for (double mu : {0.3, 1.0, 1.6, 2.0}) {
    auto r = psi_integral(lin, mu);
    for (std::size_t j = 0; j < g->size(); ++j) {
      double t = g->tau_nodes[j] - g->tau_nodes[0];
      double ex = 2.0 * std::pow(t, mu) / psifrac::gamma(mu + 1) + 3.0 * std::pow(t, mu + 1) / psifrac::gamma(mu + 2);
      CHECK(r.values[j] == doctest::Approx(ex).epsilon(1e-12).scale(1.0));
    }
  }
  auto f = sin_of_tau(g);
  for (double mu : {0.2, 0.7, 1.4}) {
    const detail::Stage st[] = {detail::Stage::integrate(mu)};
    auto chain = detail::apply_chain(st, f.values, g->step(), false);
    auto r = psi_integral(f, mu);
    for (std::size_t j = 0; j < g->size(); ++j) CHECK(r.values[j] == doctest::Approx(chain[j]).epsilon(1e-11).scale(1));
  }
}

TEST_CASE("psi_integral_order1 examples") {
  auto one = sample(unit_grid(16), [](double) { return 1.0; });
  CHECK(psi_integral_order1(one).values.back() == doctest::Approx(1.0));
  auto g = unit_grid(32, "sqrt_shift:1", 0, 3);
  CHECK(psi_integral_order1(sample(g, [](double) { return 1.0; })).values.back() == doctest::Approx(1.0));
  auto x = sample(unit_grid(16), [](double x) { return x; });
  CHECK(psi_integral_order1(x).values.back() == doctest::Approx(0.5));
  auto right = psi_integral_order1(x, Side::right);
  CHECK(right.values.front() == doctest::Approx(0.5));
  CHECK(right.values.back() == 0.0);
}

TEST_CASE("right-sided operators mirror the left-sided ones") {
  auto g = unit_grid(128);
  auto f = sample(g, [](double x) { return std::exp(x) + x * x; });
  std::vector<double> rv(f.values.rbegin(), f.values.rend());
  SampledFunction fr(g, rv);
  FracParams p(0.4, 0.3);
  auto check_mirror = [&](const SampledFunction& right, const SampledFunction& left_of_reversed) {
    for (std::size_t j = 0; j < g->size(); ++j)
      CHECK(right.values[j] == doctest::Approx(left_of_reversed.values[g->size() - 1 - j]).epsilon(1e-12));
  };
  check_mirror(psi_integral(f, 0.6, Side::right), psi_integral(fr, 0.6));
  check_mirror(psi_rl_derivative(f, 0.6, Side::right), psi_rl_derivative(fr, 0.6));
  check_mirror(psi_hilfer_derivative(f, p, Side::right), psi_hilfer_derivative(fr, p));
  auto one = sample(g, [](double) { return 1.0; });
  CHECK(psi_integral(one, 0.5, Side::right).values.front() == doctest::Approx(1.0 / psifrac::gamma(1.5)));
  CHECK(psi_frac_integral(one, p, Side::right).values.back() == 0.0);
}

TEST_CASE("psi_rl_derivative examples") {
  for (const char* id : {"identity", "sqrt_shift:1"}) {
    auto g = unit_grid(256, id);
    double mu = 0.4;
    auto f = sample_tau(g, [mu](double t) { return std::pow(t, mu); });
    auto d = psi_rl_derivative(f, mu);
    // the first nodes carry a grid-invariant interpolation error of the t^μ input
    for (std::size_t j = 16; j < g->size(); ++j) CHECK(d.values[j] == doctest::Approx(psifrac::gamma(1 + mu)).epsilon(1e-2));
  }
  auto g = unit_grid(64);
  auto one = sample(g, [](double) { return 1.0; });
  CHECK(psi_rl_derivative(one, 0.5).values.back() == doctest::Approx(0.5641895835).epsilon(1e-10));
  for (double v : psi_rl_derivative(sample(g, [](double) { return 0.0; }), 0.5).values) CHECK(v == 0.0);
  CHECK_THROWS_AS(psi_rl_derivative(sample(unit_grid(3), [](double) { return 1.0; }), 0.5), ResolutionError);
  CHECK_THROWS_AS(psi_rl_derivative(one, 1.0), std::invalid_argument);
}

TEST_CASE("psi_hilfer_derivative examples") {
  auto g = unit_grid(2048);
  PowerFunctionSpec spec(1.5, g->kernel, 0.0);
  auto f = sample(g, [&](double x) { return spec(x); });
  CHECK(psi_hilfer_derivative(f, FracParams(0.5, 0.5)).values.back() == doctest::Approx(0.8862269255).epsilon(1e-5));

  auto s = sin_of_tau(g);
  auto rl = psi_rl_derivative(s, 0.5);
  auto h0 = psi_hilfer_derivative(s, FracParams(0.5, 0.0));
  auto hs = psi_hilfer_derivative(s, FracParams(0.5, 1e-6));
  for (std::size_t j = 1; j < g->size(); ++j) {
    CHECK(h0.values[j] == rl.values[j]);
    CHECK(hs.values[j] == doctest::Approx(rl.values[j]).epsilon(1e-4));
  }
  CHECK_THROWS_AS(psi_hilfer_derivative(sample(unit_grid(3), [](double) { return 1.0; }), FracParams(0.5, 0.5)),
                  ResolutionError);
}

TEST_CASE("Hilfer derivative of a constant depends on the type") {
  auto g = unit_grid(512);
  auto one = sample(g, [](double) { return 1.0; });
  auto caputo = psi_hilfer_derivative(one, FracParams(0.5, 1.0));
  for (double v : caputo.values) CHECK(v == 0.0);
  auto mixed = psi_hilfer_derivative(one, FracParams(0.5, 0.5));
  CHECK(mixed.values.back() == doctest::Approx(1.0 / psifrac::gamma(0.5)).epsilon(1e-10));
}

TEST_CASE("psi_frac_integral examples") {
  auto g = unit_grid(1024);
  for (double v : psi_frac_integral(sample(g, [](double) { return 0.0; }), FracParams(0.5, 0.5)).values) CHECK(v == 0.0);
  auto one = sample(g, [](double) { return 1.0; });
  for (double nu : {0.0, 0.5, 1.0}) {
    auto r = psi_frac_integral(one, FracParams(0.999, nu));
    CHECK(r.values.front() == 0.0);
    CHECK(std::abs(r.values.back() - 1.0) <= 1.0 - 0.999);
  }
}

TEST_CASE("psi_frac_integral agrees with the order-mu integral") {
  for (const char* id : {"identity", "sqrt_shift:1"}) {
    auto g = unit_grid(512, id);
    auto f = sample_tau(g, [](double t) { return std::cos(3 * t) + t; });
    for (double mu : {0.1, 0.5, 0.9}) {
      auto I = psi_integral(f, mu);
      for (double nu : {0.0, 0.5, 1.0}) {
        auto r = psi_frac_integral(f, FracParams(mu, nu));
        CHECK(rel_sup(r, I, 0) <= 1e-10);
      }
    }
  }
}

TEST_CASE("psi_frac_integral on the power family matches the stage-composed closed form") {
  auto g = unit_grid(2048, "log", 1, 2);
  for (double delta : {1.0, 2.0}) {
    PowerFunctionSpec spec(delta, g->kernel, 1.0);
    auto f = sample(g, [&](double x) { return spec(x); });
    FracParams p(0.3, 0.6);
    auto r = psi_frac_integral(f, p);
    for (std::size_t j = 0; j < g->size(); j += 97)
      CHECK(r.values[j] == doctest::Approx(power_psi_frac_integral_staged(spec, p, g->x_nodes[j])).epsilon(1e-10).scale(1e-12));
  }
}

TEST_CASE("psi_frac_integral_at matches node values") {
  auto g = unit_grid(128, "sqrt_shift:1", 0, 2);
  auto f = sin_of_tau(g);
  FracParams p(0.5, 0.5);
  auto nodes = psi_frac_integral(f, p);
  auto at = psi_frac_integral_at(f, p, g->x_nodes);
  for (std::size_t j = 0; j < g->size(); ++j) CHECK(at[j] == doctest::Approx(nodes.values[j]).epsilon(1e-12).scale(1e-15));
  std::vector<double> outside{2.5};
  CHECK_THROWS_AS(psi_frac_integral_at(f, p, outside), std::invalid_argument);
}

TEST_CASE("linearity is exact at the discrete level") {
  auto g = unit_grid(256, "sqrt_shift:1");
  auto f = sin_of_tau(g);
  auto h = sample(g, [](double x) { return x * x - 0.3; });
  FracParams p(0.35, 0.6);
  const double lam = 2.5;
  std::vector<double> comb(g->size());
  for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = lam * f.values[j] - h.values[j];
  auto lhs = psi_frac_integral(SampledFunction(g, comb), p);
  auto If = psi_frac_integral(f, p), Ih = psi_frac_integral(h, p);
  for (std::size_t j = 0; j < comb.size(); ++j)
    CHECK(lhs.values[j] == doctest::Approx(lam * If.values[j] - Ih.values[j]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("positivity of the order-mu integral") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto g = unit_grid(200, "log", 1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(g->size());
    for (auto& y : v) y = u(rng) < 0.3 ? 0.0 : u(rng);
    SampledFunction f(g, v);
    for (double mu : {0.05, 0.5, 0.95, 1.5, 2.0})
      for (double y : psi_integral(f, mu).values) CHECK(y >= 0.0);
  }
}

TEST_CASE("operator algebra identities on smooth data") {
  for (const char* id : {"identity", "sqrt_shift:1"}) {
    CAPTURE(id);
    auto g = unit_grid(1024, id, 0, 2);
    auto f = sin_of_tau(g);
    const double mu = 0.4, nu = 0.7;
    FracParams p(mu, nu);

    SUBCASE("semigroup") { CHECK(rel_sup(psi_integral(psi_integral(f, mu), nu), psi_integral(f, mu + nu)) <= 1e-5); }
    SUBCASE("inversion") { CHECK(rel_sup(psi_hilfer_derivative(psi_integral(f, mu), p), f) <= 1e-3); }
    SUBCASE("composition with vanishing boundary term") {
      CHECK(rel_sup(psi_integral(psi_hilfer_derivative(f, p), mu), f) <= 1e-3);
      CHECK(rel_sup(psi_frac_integral(psi_hilfer_derivative(f, p), p), f) <= 1e-3);
    }
    SUBCASE("integer mixing") {
      CHECK(rel_sup(psi_frac_integral(psi_integral_order1(f), p), psi_integral(f, 1 + mu)) <= 1e-5);
    }
    SUBCASE("product with the kernel loses one order") {
      // I^μ(Ψ_a·f) = Ψ_a·I^μ f − μ·I^{μ+1} f, with Ψ_a = Ψ − Ψ(a)
      auto psi = sample_tau(g, [](double t) { return t; });
      auto lhs = psi_integral(map(psi, [](double a, double b) { return a * b; }, f), mu);
      auto I = psi_integral(f, mu);
      auto I1 = psi_integral(f, mu + 1);
      std::vector<double> rhs(g->size());
      for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] = psi.values[j] * I.values[j] - mu * I1.values[j];
      CHECK(rel_sup(lhs, SampledFunction(g, rhs)) <= 1e-5);
    }
  }
}

TEST_CASE("Riemann-Liouville inverse of the integral") {
  auto g = unit_grid(1024);
  auto f = sin_of_tau(g);
  CHECK(rel_sup(psi_rl_derivative(psi_integral(f, 0.3), 0.3), f) <= 1e-3);
}

TEST_CASE("uniform convergence passes through the operator") {
  auto g = unit_grid(512, "sqrt_shift:1");
  auto f = sample_tau(g, [](double t) { return std::exp(-t); });
  auto s = sin_of_tau(g);
  FracParams p(0.6, 0.2);
  auto If = psi_frac_integral(f, p);
  double prev = INFINITY;
  for (int k = 1; k <= 64; k *= 2) {
    std::vector<double> v(g->size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.values[j] + s.values[j] / k;
    double d = sup_distance(psi_frac_integral(SampledFunction(g, v), p).values, If.values);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("limit probes") {
  auto g = unit_grid(2048);
  auto one = sample(g, [](double) { return 1.0; });
  auto id = limit_probe(one, LimitRegime::identity);
  CHECK(id.steps.size() == 3);
  CHECK(id.monotone_decreasing);
  CHECK(id.steps[2].mu == doctest::Approx(1e-3));
  CHECK(id.steps[2].nu == doctest::Approx(1 - 1e-3));
  auto m1 = limit_probe(one, LimitRegime::mu_to_1);
  CHECK(m1.monotone_decreasing);
  CHECK(m1.steps.back().distance < 1e-3);
  auto zero = limit_probe(sample(g, [](double) { return 0.0; }), LimitRegime::identity);
  for (auto& st : zero.steps) CHECK(st.distance == 0.0);
  CHECK(zero.monotone_decreasing);
  CHECK(limit_probe(sin_of_tau(g), LimitRegime::identity).monotone_decreasing);
}

TEST_CASE("stage engine rejects derivatives of jumps") {
  const detail::Stage st[] = {detail::Stage::differentiate(), detail::Stage::differentiate()};
  CHECK_THROWS_AS(detail::StageChain{st}, std::invalid_argument);
}
