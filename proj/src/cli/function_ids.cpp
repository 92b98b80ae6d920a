#include "function_ids.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "psifrac/specfun.hpp"

namespace psifrac::cli {

namespace {

std::vector<double> parse_params(std::string_view rest, std::string_view whole) {
  std::vector<double> out;
  while (!rest.empty()) {
    auto next = rest.find(':');
    auto piece = rest.substr(0, next);
    double v = 0.0;
    auto res = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (res.ec != std::errc() || res.ptr != piece.data() + piece.size())
      throw std::invalid_argument("bad function id '" + std::string(whole) + "'");
    out.push_back(v);
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  return out;
}

}  // namespace

FunctionId parse_function_id(std::string_view text) {
  auto colon = text.find(':');
  auto name = text.substr(0, colon);
  auto params = colon == std::string_view::npos ? std::vector<double>{} : parse_params(text.substr(colon + 1), text);
  auto bad = [&] { return std::invalid_argument("bad function id '" + std::string(text) + "'"); };
  using K = FunctionId::Kind;
  if (name == "one" || name == "zero" || name == "sin") {
    if (!params.empty()) throw bad();
    return {name == "one" ? K::one : name == "zero" ? K::zero : K::sin};
  }
  if (name == "power") {
    if (params.size() != 1 || !(params[0] > 0.0)) throw bad();
    return {K::power, params[0]};
  }
  if (name == "ml") {
    if (params.empty() || params.size() > 2 || !(params[0] > 0.0)) throw bad();
    return {K::ml, params[0], params.size() == 2 ? params[1] : 1.0};
  }
  if (name == "linear") {
    if (params.size() != 1) throw bad();
    return {K::linear, params[0]};
  }
  throw std::invalid_argument("unknown function id '" + std::string(text) + "'");
}

std::function<double(double)> as_function(const FunctionId& id, const PsiKernel& kernel, double a) {
  const double ta = kernel.eval(a);
  auto offset = [kernel, ta](double x) { return std::max(kernel.eval(x) - ta, 0.0); };
  using K = FunctionId::Kind;
  switch (id.kind) {
    case K::one: return [](double) { return 1.0; };
    case K::zero: return [](double) { return 0.0; };
    case K::sin: return [offset](double x) { return std::sin(offset(x)); };
    case K::power: return [offset, d = id.p1](double x) { return d == 1.0 ? 1.0 : std::pow(offset(x), d - 1.0); };
    case K::ml:
      return [offset, mu = id.p1, lam = id.p2](double x) { return mittag_leffler(mu, lam * std::pow(offset(x), mu)); };
    case K::linear: return [offset, lam = id.p1](double x) { return lam * offset(x); };
  }
  throw std::logic_error("unhandled function id");
}

Integrand as_integrand(const FunctionId& id, const PsiKernel& kernel, double a) {
  if (id.kind == FunctionId::Kind::linear) return [lam = id.p1](double, double, double x) { return lam * x; };
  auto g = as_function(id, kernel, a);
  return [g](double, double s, double) { return g(s); };
}

}  // namespace psifrac::cli
