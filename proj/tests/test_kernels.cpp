#include <cmath>
#include <stdexcept>
#include <numbers>

#include "doctest.h"
#include "psifrac/kernels.hpp"

using namespace psifrac;

TEST_CASE("identity kernel") {
  auto k = make_builtin("identity", {}, {0.0, 1.0});
  CHECK(k(0.5) == 0.5);
  CHECK(k.deriv(0.5) == 1.0);
  CHECK(k.name() == "identity");
}

TEST_CASE("sqrt_shift kernel") {
  auto k = make_builtin("sqrt_shift", {1.0}, {0.0, 3.0});
  CHECK(k(0.0) == doctest::Approx(1.0));
  CHECK(k(3.0) == doctest::Approx(2.0));
  CHECK(k.inverse(2.0) == doctest::Approx(3.0));
  CHECK(make_kernel("sqrt_shift:1", {0.0, 3.0}).name() == "sqrt_shift:1");
}

TEST_CASE("log kernel") {
  auto k = make_kernel("log", {1.0, std::numbers::e});
  CHECK(k(std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(k.inverse(1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
}

TEST_CASE("builtin kernels pass validation and round trip") {
  struct Case {
    const char* id;
    Domain dom;
  };
  for (auto c : {Case{"identity", {0, 1}}, Case{"sqrt_shift:1", {0, 3}}, Case{"log", {1, std::numbers::e}},
                 Case{"exp", {-1, 2}}, Case{"power:2", {0.5, 2}}, Case{"power:0.5", {0.1, 4}}}) {
    CAPTURE(c.id);
    auto k = make_kernel(c.id, c.dom);
    auto r = validate(k, 1000);
    CHECK(r.accepted());
    CHECK(r.max_derivative_mismatch <= 1e-6);
    for (int i = 0; i < 1000; ++i) {
      double x1 = c.dom.lo + (c.dom.hi - c.dom.lo) * i / 1000.0;
      double x2 = c.dom.lo + (c.dom.hi - c.dom.lo) * (i + 1) / 1000.0;
      CHECK(k(x1) < k(x2));
      CHECK(std::abs(k.inverse(k(x1)) - x1) <= 1e-10 * (1 + std::abs(x1)));
    }
  }
}

TEST_CASE("validate flags a decreasing kernel at every interior node") {
  PsiKernel k("neg", [](double x) { return -x; }, [](double) { return -1.0; }, [](double u) { return -u; }, {0, 1});
  auto r = validate(k, 10);
  int mono = 0;
  for (auto& v : r.violations) mono += v.kind == KernelViolation::Kind::monotonicity;
  CHECK(mono == 8);
  CHECK_FALSE(r.accepted());
}

TEST_CASE("validate reports a wrong derivative and a broken inverse") {
  PsiKernel k("bad", [](double x) { return x * x + x; }, [](double) { return 1.0; }, [](double u) { return u; },
              {0.5, 1.5});
  auto r = validate(k, 20);
  bool mismatch = false, round_trip = false;
  for (auto& v : r.violations) {
    mismatch |= v.kind == KernelViolation::Kind::derivative_mismatch;
    round_trip |= v.kind == KernelViolation::Kind::inverse_round_trip;
  }
  CHECK(mismatch);
  CHECK(round_trip);
  CHECK(to_string(KernelViolation::Kind::monotonicity) == "monotonicity");
}

TEST_CASE("kernel construction errors") {
  CHECK_THROWS_AS(make_kernel("nope", {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("log", {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("power:0", {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("power:2", {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("sqrt_shift:1", {-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("sqrt_shift", {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("sqrt_shift:x", {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_kernel("identity", {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(make_kernel("identity", {0, 1}), 2), std::invalid_argument);
}
