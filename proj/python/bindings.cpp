#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "psifrac/psifrac.hpp"

namespace py = pybind11;
using namespace psifrac;

namespace {

Side parse_side(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw std::invalid_argument("side must be 'left' or 'right', got '" + s + "'");
}

// GridPtr points to const, which pybind11 cannot use as a holder.
struct Grid {
  GridPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fractional integrals and derivatives with respect to a kernel function";

  py::register_exception<PoleError>(m, "PoleError", PyExc_ValueError);
  py::register_exception<ResolutionError>(m, "ResolutionError", PyExc_ValueError);
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
  py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_RuntimeError);

  py::class_<PsiKernel>(m, "Kernel")
      .def(py::init([](const std::string& id, double lo, double hi) { return make_kernel(id, {lo, hi}); }),
           py::arg("id"), py::arg("lo"), py::arg("hi"))
      .def("__call__", &PsiKernel::eval)
      .def("deriv", &PsiKernel::deriv)
      .def("inverse", &PsiKernel::inverse)
      .def_property_readonly("name", &PsiKernel::name)
      .def_property_readonly("domain", [](const PsiKernel& k) { return py::make_tuple(k.domain().lo, k.domain().hi); })
      .def("__repr__", [](const PsiKernel& k) { return "Kernel('" + k.name() + "')"; });

  m.def(
      "kernel_violations",
      [](const PsiKernel& k, int n) {
        py::list out;
        for (const auto& v : validate(k, n).violations)
          out.append(py::make_tuple(std::string(to_string(v.kind)), v.x, v.detail));
        return out;
      },
      py::arg("kernel"), py::arg("n_samples") = 256);

  py::class_<FracParams>(m, "FracParams")
      .def(py::init<double, double>(), py::arg("mu"), py::arg("nu"))
      .def_readonly("mu", &FracParams::mu)
      .def_readonly("nu", &FracParams::nu)
      .def_readonly("xi", &FracParams::xi);

  py::class_<Grid>(m, "Grid")
      .def_property_readonly("a", [](const Grid& g) { return g.ptr->a; })
      .def_property_readonly("b", [](const Grid& g) { return g.ptr->b; })
      .def_property_readonly("n", [](const Grid& g) { return g.ptr->n; })
      .def_property_readonly("tau", [](const Grid& g) { return g.ptr->tau_nodes; })
      .def_property_readonly("x", [](const Grid& g) { return g.ptr->x_nodes; })
      .def_property_readonly("step", [](const Grid& g) { return g.ptr->step(); });
  m.def(
      "make_grid", [](const PsiKernel& k, double a, double b, int n) { return Grid{make_grid(k, a, b, n)}; },
      py::arg("kernel"), py::arg("a"), py::arg("b"), py::arg("n"));

  py::class_<SampledFunction>(m, "SampledFunction")
      .def(py::init([](const Grid& g, std::vector<double> v) { return SampledFunction(g.ptr, std::move(v)); }),
           py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", [](const SampledFunction& f) { return Grid{f.grid}; })
      .def_readonly("values", &SampledFunction::values);
  m.def(
      "sample", [](const Grid& g, const RealFn& fn) { return sample(g.ptr, fn); }, py::arg("grid"), py::arg("fn"));
  m.def(
      "sample_tau", [](const Grid& g, const RealFn& fn) { return sample_tau(g.ptr, fn); }, py::arg("grid"),
      py::arg("fn"));

  m.def(
      "psi_integral", [](const SampledFunction& f, double mu, const std::string& side) {
        return psi_integral(f, mu, parse_side(side));
      },
      py::arg("f"), py::arg("mu"), py::arg("side") = "left");
  m.def(
      "psi_rl_derivative", [](const SampledFunction& f, double mu, const std::string& side) {
        return psi_rl_derivative(f, mu, parse_side(side));
      },
      py::arg("f"), py::arg("mu"), py::arg("side") = "left");
  m.def(
      "psi_hilfer_derivative", [](const SampledFunction& f, const FracParams& p, const std::string& side) {
        return psi_hilfer_derivative(f, p, parse_side(side));
      },
      py::arg("f"), py::arg("p"), py::arg("side") = "left");
  m.def(
      "psi_frac_integral", [](const SampledFunction& f, const FracParams& p, const std::string& side) {
        return psi_frac_integral(f, p, parse_side(side));
      },
      py::arg("f"), py::arg("p"), py::arg("side") = "left");

  m.def("gamma", &psifrac::gamma, py::arg("x"));
  m.def("rgamma", &rgamma, py::arg("x"));
  m.def(
      "mittag_leffler",
      [](double z, double alpha, double beta, double tol, std::size_t max_terms) {
        return mittag_leffler(MLParams{alpha, beta, tol, max_terms}, z);
      },
      py::arg("z"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0, py::arg("tol") = 1e-16, py::arg("max_terms") = 10000);

  py::class_<PowerFunctionSpec>(m, "PowerFunction")
      .def(py::init<double, PsiKernel, double>(), py::arg("delta"), py::arg("kernel"), py::arg("a"))
      .def("__call__", &PowerFunctionSpec::operator())
      .def_readonly("delta", &PowerFunctionSpec::delta);
  m.def("power_integral", &power_integral, py::arg("power"), py::arg("mu"), py::arg("x"));
  m.def("power_hilfer_derivative", &power_hilfer_derivative, py::arg("power"), py::arg("p"), py::arg("x"));
  m.def("power_psi_frac_coefficient", &power_psi_frac_coefficient, py::arg("delta"), py::arg("p"));
  m.def("power_psi_frac_integral", &power_psi_frac_integral, py::arg("power"), py::arg("p"), py::arg("x"));
  m.def("power_psi_frac_integral_staged", &power_psi_frac_integral_staged, py::arg("power"), py::arg("p"), py::arg("x"));
  m.def("ml_function", &ml_function, py::arg("lam"), py::arg("mu"), py::arg("kernel"), py::arg("a"), py::arg("x"));
  m.def("ml_psi_frac_integral", &ml_psi_frac_integral, py::arg("p"), py::arg("kernel"), py::arg("a"), py::arg("x"));

  m.def("bound_constant_s", &bound_constant_s, py::arg("p"), py::arg("kernel"), py::arg("a"), py::arg("b"));
  m.def("bound_constant_K", &bound_constant_K, py::arg("p"), py::arg("kernel"), py::arg("a"), py::arg("b"));
  m.def("bound_constant_A", &bound_constant_A, py::arg("p"), py::arg("kernel"), py::arg("a"), py::arg("b"));

  m.def(
      "picard_solve",
      [](RealFn phi, Integrand w, const FracParams& p, const PsiKernel& k, double a, double b, int n, double tol,
         int max_iter, bool depends_on_t) {
        VolterraProblem prob{std::move(phi), std::move(w), p, k, a, b, n, depends_on_t};
        PicardTrace t = picard_solve(prob, tol, max_iter);
        py::dict out;
        out["x"] = t.iterates.back().grid->x_nodes;
        out["values"] = t.iterates.back().values;
        out["sup_diffs"] = t.sup_diffs;
        out["converged"] = t.converged;
        out["iterations"] = t.iterations;
        out["residual"] = t.residual;
        return out;
      },
      py::arg("phi"), py::arg("integrand"), py::arg("p"), py::arg("kernel"), py::arg("a"), py::arg("b"),
      py::arg("n") = 512, py::arg("tol") = 1e-10, py::arg("max_iter") = 200, py::arg("depends_on_t") = true);

  py::class_<MalthusSpec>(m, "Malthus")
      .def(py::init<double, double, FracParams, PsiKernel, double>(), py::arg("n0"), py::arg("lam"), py::arg("p"),
           py::arg("kernel"), py::arg("horizon"))
      .def("__call__", [](const MalthusSpec& s, double t) { return malthus_solution(s, t); })
      .def("residual", [](const MalthusSpec& s, int n) {
        auto r = malthus_residual(s, n);
        return py::make_tuple(r.residual, r.reference);
      }, py::arg("n_grid") = 1024);
}
