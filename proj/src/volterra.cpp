#include "psifrac/volterra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "composite.hpp"
#include "psifrac/errors.hpp"
#include "psifrac/spaces.hpp"

namespace psifrac {

namespace {

constexpr double divergence_bound = 1e12;

void check_problem(const VolterraProblem& pr) {
  if (!pr.phi || !pr.integrand) throw std::invalid_argument("volterra: phi and integrand are required");
  if (!(pr.a < pr.b)) throw std::invalid_argument("volterra: need a < b");
  if (pr.n < 8) throw std::invalid_argument("volterra: n must be >= 8");
}

class PicardMap {
 public:
  PicardMap(const VolterraProblem& pr, GridPtr grid)
      : pr_(pr),
        grid_(std::move(grid)),
        eval_(detail::StageChain(detail::composite_integral_stages(pr.p.beta(), pr.p.gamma())),
              static_cast<std::size_t>(pr.n), grid_->step()),
        phi_(grid_->size()),
        w_(grid_->size()) {
    for (std::size_t j = 0; j < phi_.size(); ++j) {
      phi_[j] = pr.phi(grid_->x_nodes[j]);
      if (!std::isfinite(phi_[j])) throw std::invalid_argument("volterra: phi is not finite on [a, b]");
    }
  }

  const std::vector<double>& phi() const { return phi_; }

  // φ + I[W(t, ·, x(·))]
  std::vector<double> operator()(const std::vector<double>& x, int iterate) {
    const auto& xs = grid_->x_nodes;
    const std::size_t size = xs.size();
    std::vector<double> out(size);
    if (!pr_.integrand_depends_on_t) {
      for (std::size_t j = 0; j < size; ++j) w_[j] = checked(pr_.integrand(xs[j], xs[j], x[j]), iterate);
      out = eval_.apply(w_);
    } else {
      for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t j = 0; j <= k; ++j) w_[j] = checked(pr_.integrand(xs[k], xs[j], x[j]), iterate);
        out[k] = eval_.apply_at(std::span<const double>(w_.data(), k + 1), k);
      }
    }
    for (std::size_t j = 0; j < size; ++j) out[j] += phi_[j];
    return out;
  }

 private:
  static double checked(double v, int iterate) {
    if (!std::isfinite(v))
      throw DivergenceError("volterra: integrand not finite while building iterate " + std::to_string(iterate));
    return v;
  }

  const VolterraProblem& pr_;
  GridPtr grid_;
  detail::ChainEvaluator eval_;
  std::vector<double> phi_;
  std::vector<double> w_;
};

}  // namespace

PicardTrace picard_solve(const VolterraProblem& problem, double tol, int max_iter,
                         const std::optional<SampledFunction>& x0) {
  check_problem(problem);
  if (!(tol > 0.0)) throw std::invalid_argument("picard_solve: tol must be > 0");
  if (max_iter < 1) throw std::invalid_argument("picard_solve: max_iter must be >= 1");

  GridPtr grid = make_grid(problem.kernel, problem.a, problem.b, problem.n);
  if (x0 && x0->values.size() != grid->size())
    throw std::invalid_argument("picard_solve: initial iterate has the wrong number of nodes");
  PicardMap map(problem, grid);

  PicardTrace trace;
  trace.iterates.emplace_back(grid, x0 ? x0->values : map.phi());
  for (int k = 1; k <= max_iter; ++k) {
    auto next = map(trace.iterates.back().values, k);
    const double size = sup_norm(next);
    if (!(size <= divergence_bound))
      throw DivergenceError("volterra: iterate " + std::to_string(k) + " exceeded 1e12 in sup norm");
    const double diff = sup_distance(next, trace.iterates.back().values);
    trace.iterates.emplace_back(grid, std::move(next));
    trace.sup_diffs.push_back(diff);
    trace.iterations = k;
    if (diff <= tol) {
      trace.converged = true;
      break;
    }
  }
  const auto& last = trace.iterates.back().values;
  trace.residual = sup_distance(last, map(last, trace.iterations + 1));
  return trace;
}

ContractionReport contraction_report(const VolterraProblem& problem, double lipschitz_est) {
  if (!(lipschitz_est >= 0.0)) throw std::invalid_argument("contraction_report: lipschitz_est must be >= 0");
  const double A = bound_constant_A(problem.p, problem.kernel, problem.a, problem.b);
  const double factor = lipschitz_est / A;
  return {A, factor, factor < 1.0};
}

}  // namespace psifrac
