#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "psifrac/kernels.hpp"
#include "psifrac/volterra.hpp"

namespace psifrac::cli {

// one | zero | sin | power:<delta> | ml:<mu>[:<lambda>] | linear:<lambda>
struct FunctionId {
  enum class Kind { one, zero, sin, power, ml, linear };
  Kind kind = Kind::one;
  double p1 = 0.0;
  double p2 = 1.0;
};

FunctionId parse_function_id(std::string_view text);

// As a function of x, with every family anchored at t = Ψ(x) − Ψ(a):
// power → t^{δ−1}, ml → E_μ(λ t^μ), sin → sin t, linear → λ t.
std::function<double(double)> as_function(const FunctionId& id, const PsiKernel& kernel, double a);

// As W(t, s, x): linear → λx, every other id → g(s) from as_function.
Integrand as_integrand(const FunctionId& id, const PsiKernel& kernel, double a);

}  // namespace psifrac::cli
