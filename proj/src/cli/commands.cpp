#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "function_ids.hpp"
#include "psifrac/psifrac.hpp"

namespace psifrac::cli {

double relative_sup_error(const SampledFunction& numeric, const std::function<double(double)>& oracle, int skip) {
  const auto xs = numeric.x();
  double err = 0.0, scale = 0.0;
  for (std::size_t j = static_cast<std::size_t>(skip); j < xs.size(); ++j) {
    const double ex = oracle(xs[j]);
    err = std::max(err, std::abs(numeric.values[j] - ex));
    scale = std::max(scale, std::abs(ex));
  }
  return scale > 0.0 ? err / scale : err;
}

FigureData build_figure(int which) {
  FigureData fig;
  switch (which) {
    case 1: fig.kernel_id = "identity", fig.a = 0.0, fig.b = 1.0; break;
    case 2: fig.kernel_id = "sqrt_shift:1", fig.a = 0.0, fig.b = 1.0; break;
    case 3: fig.kernel_id = "log", fig.a = 1.0, fig.b = std::numbers::e; break;
    default: throw std::invalid_argument("figure index must be 1, 2 or 3");
  }
  const PsiKernel kernel = make_kernel(fig.kernel_id, {fig.a, fig.b});
  const PowerFunctionSpec spec(1.5, kernel, fig.a);
  const double nu = 0.5;

  std::vector<double> xs(figure_samples);
  for (int i = 0; i < figure_samples; ++i)
    xs[i] = i == figure_samples - 1 ? fig.b : fig.a + i * (fig.b - fig.a) / (figure_samples - 1);

  fig.header.push_back("x");
  fig.columns.push_back(xs);
  for (double mu : figure_mus) {
    std::ostringstream name;
    name << "mu_" << std::fixed;
    name.precision(1);
    name << mu;
    fig.header.push_back(name.str());
    std::vector<double> col;
    for (double x : xs) col.push_back(power_psi_frac_integral(spec, FracParams(mu, nu), x));
    fig.columns.push_back(std::move(col));
  }
  auto grid = make_grid(kernel, fig.a, fig.b, figure_grid);
  auto f = sample(grid, [&spec](double x) { return spec(x); });
  fig.header.push_back("numeric_mu_0.5");
  fig.columns.push_back(psi_frac_integral_at(f, FracParams(0.5, nu), xs));
  return fig;
}

namespace {

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const PoleError*>(&e)) return "pole";
  if (dynamic_cast<const NonConvergenceError*>(&e)) return "non_convergence";
  if (dynamic_cast<const DivergenceError*>(&e)) return "divergence";
  if (dynamic_cast<const ResolutionError*>(&e)) return "resolution";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const std::domain_error*>(&e)) return "domain";
  return "runtime";
}

// Writes to path, or to fallback when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary);
    if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    os_ = &file_;
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

Side parse_side(const std::string& s) { return s == "right" ? Side::right : Side::left; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size() || v < 4) throw std::invalid_argument("bad grid size '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty grid size list");
  return out;
}

// Applies the options listed in a flat key = value file unless given on the command line.
void apply_config(CLI::App& sub, const std::string& path) {
  if (path.empty()) return;
  if (!std::filesystem::exists(path)) throw std::invalid_argument("config file '" + path + "' not found");
  for (const auto& item : CLI::ConfigINI().from_file(path)) {
    if (item.name == "config") continue;
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == sub.get_name()))
      throw std::invalid_argument("config key '" + item.fullname() + "' does not belong to '" + sub.get_name() + "'");
    CLI::Option* opt = sub.get_option_no_throw("--" + item.name);
    if (!opt) throw std::invalid_argument("unknown config key '" + item.name + "' for '" + sub.get_name() + "'");
    if (opt->count() == 0) {
      opt->add_result(item.inputs);
      opt->run_callback();
    }
  }
}

struct Args {
  std::string config;
  std::string kernel = "identity";
  double a = 0.0;
  double b = 1.0;
  int n = 1024;
  double mu = 0.5;
  double nu = 0.5;
  double delta = 1.5;
  double lambda = 1.0;
  double x = 1.0;
  double z = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
  double tol = -1.0;
  int max_terms = 10000;
  int max_iter = 200;
  int samples = 1000;
  int steps = 200;
  double n0 = 1.0;
  double t_max = 2.0;
  std::string kind;
  std::string which;
  std::string f = "one";
  std::string phi = "one";
  std::string w = "zero";
  std::string side = "left";
  std::string n_list = "256,512,1024,2048";
  std::string oracle = "lemma";
  std::string out;
  std::string log;
  std::string out_dir = ".";
};

void add_kernel_opts(CLI::App* s, Args& a, bool with_n) {
  s->add_option("--kernel", a.kernel, "kernel id: identity, sqrt_shift:<c>, log, exp, power:<p>");
  s->add_option("--a", a.a, "left endpoint");
  s->add_option("--b", a.b, "right endpoint");
  if (with_n) s->add_option("--n", a.n, "grid subintervals")->check(CLI::Range(4, 1 << 20));
}

void add_frac_opts(CLI::App* s, Args& a) {
  s->add_option("--mu", a.mu, "order mu");
  s->add_option("--nu", a.nu, "type nu");
}

int cmd_kernel(const Args& a, std::ostream& out) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.b});
  const KernelReport r = validate(k, a.samples);
  out << "field,value\n";
  out << "name," << k.name() << '\n';
  out << "accepted," << (r.accepted() ? "true" : "false") << '\n';
  out << "max_derivative_mismatch," << format_number(r.max_derivative_mismatch) << '\n';
  out << "max_round_trip_error," << format_number(r.max_round_trip_error) << '\n';
  out << "violations," << r.violations.size() << '\n';
  for (const auto& v : r.violations)
    out << to_string(v.kind) << "," << format_number(v.x) << ":" << format_number(v.detail) << '\n';
  return r.accepted() ? 0 : 3;
}

int cmd_ml(const Args& a, std::ostream& out) {
  MLParams p{a.alpha, a.beta};
  if (a.tol > 0.0) p.tol = a.tol;
  if (a.max_terms < 1) throw std::invalid_argument("max-terms must be >= 1");
  p.max_terms = static_cast<std::size_t>(a.max_terms);
  const MLResult r = mittag_leffler_series(p, a.z);
  out << "value,terms\n" << format_number(r.value) << "," << r.terms << '\n';
  return 0;
}

SampledFunction apply_kind(const std::string& kind, const SampledFunction& f, const Args& a) {
  const Side side = parse_side(a.side);
  if (kind == "integral") return psi_integral(f, a.mu, side);
  if (kind == "rl-deriv") return psi_rl_derivative(f, a.mu, side);
  if (kind == "hilfer") return psi_hilfer_derivative(f, FracParams(a.mu, a.nu), side);
  if (kind == "psi-frac") return psi_frac_integral(f, FracParams(a.mu, a.nu), side);
  throw std::invalid_argument("unknown operator kind '" + kind + "'");
}

int cmd_op(const Args& a, std::ostream& out) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.b});
  auto grid = make_grid(k, a.a, a.b, a.n);
  auto f = sample(grid, as_function(parse_function_id(a.f), k, a.a));
  auto r = apply_kind(a.kind, f, a);
  Sink sink(a.out, out);
  write_csv(sink.get(), {"x", "value"}, {grid->x_nodes, r.values});
  return 0;
}

int cmd_oracle(const Args& a, std::ostream& out) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.x > a.a ? a.x : a.a + 1.0});
  double v = 0.0;
  if (a.which == "power-int") {
    v = power_integral(PowerFunctionSpec(a.delta, k, a.a), a.mu, a.x);
  } else if (a.which == "power-hilfer") {
    v = power_hilfer_derivative(PowerFunctionSpec(a.delta, k, a.a), FracParams(a.mu, a.nu), a.x);
  } else if (a.which == "power-psifrac") {
    v = power_psi_frac_integral(PowerFunctionSpec(a.delta, k, a.a), FracParams(a.mu, a.nu), a.x);
  } else if (a.which == "ml-eigen") {
    v = ml_hilfer_eigen(a.lambda, FracParams(a.mu, a.nu), k, a.a, a.x);
  } else if (a.which == "ml-psifrac") {
    v = ml_psi_frac_integral(FracParams(a.mu, a.nu), k, a.a, a.x);
  } else {
    throw std::invalid_argument("unknown oracle '" + a.which + "'");
  }
  out << "value\n" << format_number(v) << '\n';
  return 0;
}

int cmd_compare(const Args& a, std::ostream& out) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.b});
  const PowerFunctionSpec spec(a.delta, k, a.a);
  std::function<double(double)> oracle;
  if (a.kind == "integral") {
    oracle = [&](double x) { return power_integral(spec, a.mu, x); };
  } else if (a.kind == "rl-deriv") {
    oracle = [&](double x) { return power_hilfer_derivative(spec, FracParams(a.mu, 0.0), x); };
  } else if (a.kind == "hilfer") {
    oracle = [&](double x) { return power_hilfer_derivative(spec, FracParams(a.mu, a.nu), x); };
  } else if (a.kind == "psi-frac") {
    if (a.oracle == "staged")
      oracle = [&](double x) { return power_psi_frac_integral_staged(spec, FracParams(a.mu, a.nu), x); };
    else
      oracle = [&](double x) { return power_psi_frac_integral(spec, FracParams(a.mu, a.nu), x); };
  } else {
    throw std::invalid_argument("unknown operator kind '" + a.kind + "'");
  }
  Args left = a;
  left.side = "left";
  Sink sink(a.out, out);
  auto& os = sink.get();
  os << "n,rel_error,observed_order\n";
  double prev_err = 0.0;
  int prev_n = 0;
  for (int n : parse_int_list(a.n_list)) {
    auto grid = make_grid(k, a.a, a.b, n);
    auto f = sample(grid, [&spec](double x) { return spec(x); });
    const double err = relative_sup_error(apply_kind(a.kind, f, left), oracle);
    os << n << "," << format_number(err) << ",";
    if (prev_n > 0) os << format_number(std::log2(prev_err / err) / std::log2(static_cast<double>(n) / prev_n));
    os << '\n';
    prev_err = err;
    prev_n = n;
  }
  return 0;
}

int cmd_bounds(const Args& a, std::ostream& out) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.b});
  const FracParams p(a.mu, a.nu);
  write_csv(out, {"s", "K", "A"},
            {{bound_constant_s(p, k, a.a, a.b)}, {bound_constant_K(p, k, a.a, a.b)}, {bound_constant_A(p, k, a.a, a.b)}});
  return 0;
}

int cmd_volterra(const Args& a, std::ostream& out, std::ostream& err) {
  const PsiKernel k = make_kernel(a.kernel, {a.a, a.b});
  VolterraProblem pr{as_function(parse_function_id(a.phi), k, a.a),
                     as_integrand(parse_function_id(a.w), k, a.a),
                     FracParams(a.mu, a.nu),
                     k,
                     a.a,
                     a.b,
                     a.n,
                     false};
  const double tol = a.tol > 0.0 ? a.tol : 1e-10;
  const PicardTrace t = picard_solve(pr, tol, a.max_iter);
  {
    Sink sink(a.out, out);
    write_csv(sink.get(), {"x", "value"}, {t.iterates.back().grid->x_nodes, t.iterates.back().values});
  }
  {
    Sink sink(a.log, err);
    std::vector<double> ks;
    for (int i = 1; i <= t.iterations; ++i) ks.push_back(i);
    write_csv(sink.get(), {"k", "sup_diff"}, {ks, t.sup_diffs});
  }
  err << "converged=" << (t.converged ? "true" : "false") << " iterations=" << t.iterations
      << " residual=" << format_number(t.residual) << '\n';
  return t.converged ? 0 : 4;
}

int cmd_malthus(const Args& a, std::ostream& out) {
  if (a.steps < 1) throw std::invalid_argument("steps must be >= 1");
  const PsiKernel k = make_kernel(a.kernel, {0.0, a.t_max});
  const MalthusSpec spec(a.n0, a.lambda, FracParams(a.mu, a.nu), k, a.t_max);
  std::vector<double> ts, ns;
  for (int i = 0; i <= a.steps; ++i) {
    const double t = i == a.steps ? a.t_max : i * a.t_max / a.steps;
    ts.push_back(t);
    ns.push_back(malthus_solution(spec, t));
  }
  Sink sink(a.out, out);
  write_csv(sink.get(), {"t", "N"}, {ts, ns});
  return 0;
}

int cmd_figures(const Args& a, std::ostream& out) {
  std::filesystem::create_directories(a.out_dir);
  for (int which = 1; which <= 3; ++which) {
    const FigureData fig = build_figure(which);
    const auto path = (std::filesystem::path(a.out_dir) / ("fig" + std::to_string(which) + ".csv")).string();
    Sink sink(path, out);
    write_csv(sink.get(), fig.header, fig.columns);
    out << path << '\n';
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Psi-fractional operators, oracles, Volterra solver and Malthus model", "psifrac"};
  app.require_subcommand(1);
  Args a;
  const auto kinds = CLI::IsMember({"integral", "rl-deriv", "hilfer", "psi-frac"});

  auto* kernel = app.add_subcommand("kernel", "validate a builtin kernel on [a, b]");
  add_kernel_opts(kernel, a, false);
  kernel->add_option("--samples", a.samples, "sample count")->check(CLI::PositiveNumber);

  auto* ml = app.add_subcommand("ml", "Mittag-Leffler E_{alpha,beta}(z)");
  ml->add_option("--alpha", a.alpha)->required();
  ml->add_option("--beta", a.beta);
  ml->add_option("--z", a.z)->required();
  ml->add_option("--tol", a.tol);
  ml->add_option("--max-terms", a.max_terms);

  auto* op = app.add_subcommand("op", "apply an operator to a builtin function, CSV x,value");
  op->add_option("--kind", a.kind)->required()->check(kinds);
  add_frac_opts(op, a);
  add_kernel_opts(op, a, true);
  op->add_option("--f", a.f, "function id");
  op->add_option("--side", a.side)->check(CLI::IsMember({"left", "right"}));
  op->add_option("--out", a.out, "output path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "closed-form value at one point");
  oracle->add_option("--which", a.which)
      ->required()
      ->check(CLI::IsMember({"power-int", "power-hilfer", "power-psifrac", "ml-eigen", "ml-psifrac"}));
  add_frac_opts(oracle, a);
  oracle->add_option("--delta", a.delta);
  oracle->add_option("--lambda", a.lambda);
  oracle->add_option("--kernel", a.kernel);
  oracle->add_option("--a", a.a);
  oracle->add_option("--x", a.x);

  auto* compare = app.add_subcommand("compare", "oracle-vs-numeric sweep on the power family");
  compare->add_option("--kind", a.kind)->required()->check(kinds);
  add_frac_opts(compare, a);
  add_kernel_opts(compare, a, false);
  compare->add_option("--delta", a.delta);
  compare->add_option("--n-list", a.n_list, "comma separated grid sizes");
  compare->add_option("--oracle", a.oracle, "psi-frac oracle: lemma or staged")
      ->check(CLI::IsMember({"lemma", "staged"}));
  compare->add_option("--out", a.out);

  auto* bounds = app.add_subcommand("bounds", "print the constants s, K, A");
  add_frac_opts(bounds, a);
  add_kernel_opts(bounds, a, false);

  auto* volterra = app.add_subcommand("volterra", "Picard solve of x = phi + I[W(t,s,x)]");
  add_frac_opts(volterra, a);
  add_kernel_opts(volterra, a, true);
  volterra->add_option("--phi", a.phi);
  volterra->add_option("--w", a.w);
  volterra->add_option("--tol", a.tol);
  volterra->add_option("--max-iter", a.max_iter);
  volterra->add_option("--out", a.out);
  volterra->add_option("--log", a.log, "iteration log path (default stderr)");

  auto* malthus = app.add_subcommand("malthus", "fractional Malthus curve, CSV t,N");
  malthus->add_option("--n0", a.n0);
  malthus->add_option("--lambda", a.lambda);
  add_frac_opts(malthus, a);
  malthus->add_option("--kernel", a.kernel);
  malthus->add_option("--t-max", a.t_max);
  malthus->add_option("--steps", a.steps);
  malthus->add_option("--out", a.out);

  auto* figures = app.add_subcommand("figures", "write fig1.csv, fig2.csv, fig3.csv");
  figures->add_option("--out-dir", a.out_dir);

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->add_option("--config", a.config, "flat key = value file; flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: usage: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(*sub, a.config);
    const std::string name = sub->get_name();
    if (name == "kernel") return cmd_kernel(a, out);
    if (name == "ml") return cmd_ml(a, out);
    if (name == "op") return cmd_op(a, out);
    if (name == "oracle") return cmd_oracle(a, out);
    if (name == "compare") return cmd_compare(a, out);
    if (name == "bounds") return cmd_bounds(a, out);
    if (name == "volterra") return cmd_volterra(a, out, err);
    if (name == "malthus") return cmd_malthus(a, out);
    if (name == "figures") return cmd_figures(a, out);
    throw std::logic_error("unhandled subcommand " + name);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace psifrac::cli
