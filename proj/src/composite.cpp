#include "composite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "psifrac/specfun.hpp"

namespace psifrac::detail {

StageChain::StageChain(std::span<const Stage> stages) {
  for (const Stage& st : stages) {
    if (st.kind == Stage::Kind::integrate) {
      const double a = st.order;
      if (a < 0.0) throw std::invalid_argument("stage chain: negative integration order");
      if (a == 0.0) continue;
      if (const_alive_) {
        const_coef_ *= gamma(const_power_ + 1.0) / gamma(const_power_ + a + 1.0);
        const_power_ += a;
      }
      ramp_coef_ *= gamma(ramp_power_ + 1.0) / gamma(ramp_power_ + a + 1.0);
      ramp_power_ += a;
    } else {
      if (const_alive_) {
        if (const_power_ == 0.0) {
          const_alive_ = false;
        } else {
          const_coef_ *= const_power_;
          const_power_ -= 1.0;
        }
      }
      if (ramp_power_ == 0.0) throw std::invalid_argument("stage chain: derivative of a jump (point mass)");
      ramp_coef_ *= ramp_power_;
      ramp_power_ -= 1.0;
    }
  }
}

ChainEvaluator::ChainEvaluator(const StageChain& chain, std::size_t n, double h)
    : chain_(chain), n_(n), h_(h), ramp_table_(n + 1), const_table_(n + 1, 0.0) {
  const double pr = chain_.ramp_power();
  for (std::size_t m = 0; m <= n; ++m) {
    ramp_table_[m] = (m == 0) ? (pr == 0.0 ? chain_.ramp_coef() : 0.0)
                              : chain_.ramp_coef() * std::pow(static_cast<double>(m) * h, pr);
  }
  if (chain_.constant_alive()) {
    const double p0 = chain_.constant_power();
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == 0) {
        const_table_[k] = p0 == 0.0   ? chain_.constant_coef()
                          : p0 > 0.0 ? 0.0
                                     : std::numeric_limits<double>::infinity();
      } else {
        const_table_[k] = chain_.constant_coef() * std::pow(static_cast<double>(k) * h, p0);
      }
    }
  }
}

void ChainEvaluator::slopes(std::span<const double> values, std::size_t upto, std::vector<double>& c) const {
  // c_0 = s_0, c_j = s_j − s_{j−1}, j < upto
  c.resize(upto);
  double prev = 0.0;
  for (std::size_t j = 0; j < upto; ++j) {
    const double s = (values[j + 1] - values[j]) / h_;
    c[j] = s - prev;
    prev = s;
  }
}

double ChainEvaluator::constant_part(double f0, std::size_t k) const {
  if (!chain_.constant_alive() || f0 == 0.0) return 0.0;
  return f0 * const_table_[k];
}

std::vector<double> ChainEvaluator::apply(std::span<const double> values) const {
  if (values.size() != n_ + 1) throw std::invalid_argument("chain evaluator: size mismatch");
  std::vector<double> c;
  slopes(values, n_, c);
  std::vector<double> out(n_ + 1, 0.0);
  for (std::size_t k = 0; k <= n_; ++k) {
    double acc = 0.0;
    const std::size_t upto = (k == 0 && chain_.ramp_power() == 0.0) ? 1 : k;
    for (std::size_t j = 0; j < upto; ++j) acc += c[j] * ramp_table_[k - j];
    out[k] = acc + constant_part(values[0], k);
  }
  if (!std::isfinite(out[0]) && n_ >= 2) out[0] = 2.0 * out[1] - out[2];
  return out;
}

double ChainEvaluator::apply_at(std::span<const double> values, std::size_t k) const {
  if (k > n_ || values.size() < k + 1) throw std::invalid_argument("chain evaluator: node out of range");
  if (k == 0) {
    if (n_ < 2) throw std::invalid_argument("chain evaluator: node 0 needs n >= 2");
    double direct = constant_part(values[0], 0);
    if (chain_.ramp_power() == 0.0) direct += ramp_table_[0] * (values[1] - values[0]) / h_;
    if (std::isfinite(direct)) return direct;
    return 2.0 * apply_at(values, 1) - apply_at(values, 2);
  }
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double s = (values[j + 1] - values[j]) / h_;
    acc += (s - prev) * ramp_table_[k - j];
    prev = s;
  }
  return acc + constant_part(values[0], k);
}

double ChainEvaluator::evaluate(std::span<const double> values, double t) const {
  if (values.size() != n_ + 1) throw std::invalid_argument("chain evaluator: size mismatch");
  if (t < 0.0 || t > n_ * h_ * (1.0 + 1e-12)) throw std::invalid_argument("chain evaluator: point outside grid");
  const double pr = chain_.ramp_power();
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t j = 0; j < n_; ++j) {
    const double tj = static_cast<double>(j) * h_;
    if (tj > t || (tj == t && pr != 0.0)) break;
    const double s = (values[j + 1] - values[j]) / h_;
    acc += (s - prev) * chain_.ramp_coef() * (t == tj ? 1.0 : std::pow(t - tj, pr));
    prev = s;
  }
  if (chain_.constant_alive() && values[0] != 0.0) {
    const double p0 = chain_.constant_power();
    if (t == 0.0 && p0 < 0.0) throw std::domain_error("chain evaluator: value is singular at the origin");
    acc += values[0] * chain_.constant_coef() * (p0 == 0.0 ? 1.0 : std::pow(t, p0));
  }
  return acc;
}

std::vector<Stage> composite_integral_stages(double first, double last) {
  std::vector<Stage> stages;
  auto push_derivative = [&stages](double q) {
    if (q == 0.0) return;
    stages.push_back(Stage::integrate(1.0 - q));
    stages.push_back(Stage::differentiate());
  };
  push_derivative(first);
  stages.push_back(Stage::integrate(1.0));
  push_derivative(last);
  return stages;
}

std::vector<double> apply_chain(std::span<const Stage> stages, std::span<const double> values, double h, bool right) {
  StageChain chain(stages);
  ChainEvaluator eval(chain, values.size() - 1, h);
  if (!right) return eval.apply(values);
  std::vector<double> rev(values.rbegin(), values.rend());
  auto out = eval.apply(rev);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace psifrac::detail
