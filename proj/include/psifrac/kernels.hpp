#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace psifrac {

using RealFn = std::function<double(double)>;

/// Closed interval [lo, hi] on which a kernel is defined.
struct Domain {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Strictly increasing C1 kernel Ψ together with Ψ′ and Ψ⁻¹.
///
/// Immutable once built. Builtin families come from make_builtin(); arbitrary
/// user kernels are accepted as (eval, deriv, inverse) triples and should be
/// passed through validate() before use, since nothing here checks them.
class PsiKernel {
 public:
  PsiKernel(std::string name, RealFn eval, RealFn deriv, RealFn inverse, Domain domain);

  double operator()(double x) const { return eval_(x); }
  double eval(double x) const { return eval_(x); }
  double deriv(double x) const { return deriv_(x); }
  double inverse(double u) const { return inverse_(u); }

  const Domain& domain() const noexcept { return domain_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  RealFn eval_;
  RealFn deriv_;
  RealFn inverse_;
  Domain domain_;
};

/// Builtin kernel families: identity, sqrt_shift (Ψ=√(x+c)), log, exp, power (Ψ=x^p).
///
/// Throws std::invalid_argument for an unknown family, bad parameters, or a
/// domain outside the family's natural domain (where Ψ′ must stay finite and
/// positive, e.g. log and power need lo > 0).
PsiKernel make_builtin(std::string_view family, const std::vector<double>& params, Domain domain);

/// Parses "identity", "sqrt_shift:<c>", "log", "exp", "power:<p>" and builds the kernel.
PsiKernel make_kernel(std::string_view id, Domain domain);

struct KernelViolation {
  enum class Kind { monotonicity, derivative_sign, derivative_mismatch, inverse_round_trip };
  Kind kind;
  double x;
  double detail;  // offending value: relative mismatch, round-trip error, Ψ′(x), ...
};

std::string_view to_string(KernelViolation::Kind kind);

struct KernelReport {
  std::vector<KernelViolation> violations;
  double max_derivative_mismatch = 0.0;  // relative, vs central differences at interior samples
  double max_round_trip_error = 0.0;     // |Ψ⁻¹(Ψ(x)) − x|
  bool accepted() const noexcept { return violations.empty(); }
};

/// Samples the kernel at n_samples equispaced points and reports monotonicity
/// breaks (interior nodes), nonpositive Ψ′, Ψ′ mismatch against central
/// differences above 1e-6 relative, and inverse round-trip error above 1e-10(1+|x|).
KernelReport validate(const PsiKernel& kernel, int n_samples);

}  // namespace psifrac
