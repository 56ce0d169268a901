#include "weylprice/acceptance.hpp"
#include "weylprice/algebra.hpp"
#include "weylprice/error.hpp"
#include "weylprice/fock.hpp"
#include "weylprice/gaussian.hpp"
#include "weylprice/io.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/qem.hpp"
#include "weylprice/weyl.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace weylprice;

namespace {

SymMatrix sym(const Matrix& m) { return SymMatrix::from_dense(m); }

GaussianState make_state(const Vector& mean, const Matrix& cov, const std::optional<Matrix>& ccr) {
  if (!ccr) return {mean, sym(cov)};
  return {mean, sym(cov), AntisymMatrix::from_dense(*ccr)};
}

MultiIndex index(const std::vector<int>& v) { return MultiIndex(v); }

py::dict residuals_dict(const QuantumPriceResiduals& r) {
  py::dict d;
  d["mean"] = r.mean;
  d["cov"] = r.cov.dense();
  d["mixed"] = r.mixed.dense();
  return d;
}

}  // namespace

PYBIND11_MODULE(_weylprice, m) {
  m.doc() = "Gaussian moment and Weyl-quantization toolkit";
  m.attr("__version__") = kVersion;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());

  py::class_<GaussianState>(m, "GaussianState")
      .def(py::init(&make_state), py::arg("mean"), py::arg("cov"), py::arg("ccr") = std::nullopt)
      .def_static("vacuum", &GaussianState::vacuum)
      .def_static("thermal", &GaussianState::thermal, py::arg("nbar"))
      .def_static("standard", &GaussianState::standard, py::arg("n"))
      .def_static("named", [](const std::string& name) { return io::named_state(name); })
      .def_property_readonly("dim", &GaussianState::dim)
      .def_property_readonly("mean", [](const GaussianState& s) { return s.mean(); })
      .def_property_readonly("cov", [](const GaussianState& s) { return s.cov().dense(); })
      .def_property_readonly("ccr", [](const GaussianState& s) { return s.ccr().dense(); })
      .def("to_json", [](const GaussianState& s) { return io::to_json(s).dump(); })
      .def("__repr__", [](const GaussianState& s) { return "GaussianState(dim=" + std::to_string(s.dim()) + ")"; });

  m.def(
      "validate",
      [](const GaussianState& s, const std::string& mode) {
        const ValidityVerdict v = validate(s, parse_validity_mode(mode));
        return py::make_tuple(v.pass, v.min_eigenvalue);
      },
      py::arg("state"), py::arg("mode") = "quantum", "Returns (pass, min_eigenvalue).");

  m.def(
      "expect_quadrature",
      [](const std::string& function_json, const GaussianState& s, int order) {
        return expect_quadrature(io::test_function_from_json(io::parse(function_json)), s, {order}).value;
      },
      py::arg("function"), py::arg("state"), py::arg("order") = 40);
  m.def(
      "expect_monte_carlo",
      [](const std::string& function_json, const GaussianState& s, std::uint64_t samples, std::uint64_t seed) {
        const MomentEstimate e =
            expect_monte_carlo(io::test_function_from_json(io::parse(function_json)), s, samples, seed);
        return py::make_tuple(e.value, *e.std_error);
      },
      py::arg("function"), py::arg("state"), py::arg("samples"), py::arg("seed") = 0);
  m.def("mgf", &mgf, py::arg("state"), py::arg("lam"));

  m.def("quasi_char", &quasi_char, py::arg("state"), py::arg("lam"));
  m.def(
      "weyl_expectation",
      [](const Matrix& pi, const GaussianState& s, int order) {
        return weyl_expectation(FourierSymbol::gaussian(sym(pi)), s, {order});
      },
      py::arg("pi"), py::arg("state"), py::arg("order") = 40, "E exp(-X^T Pi X / 2) by quadrature in lambda.");
  m.def(
      "quantum_price_residuals",
      [](const Matrix& pi, const GaussianState& s, double h) {
        return residuals_dict(quantum_price_residuals(FourierSymbol::gaussian(sym(pi)), s, h));
      },
      py::arg("pi"), py::arg("state"), py::arg("h") = 1e-3);

  m.def(
      "qem_closed", [](const GaussianState& s, const Matrix& pi) { return qem_closed(QemProblem(s, sym(pi))); },
      py::arg("state"), py::arg("pi"));
  m.def(
      "psi", [](const Matrix& cov, const Matrix& pi) { return psi(sym(cov), sym(pi)).dense(); }, py::arg("cov"),
      py::arg("pi"));
  m.def(
      "qem_affine_bound", [](const GaussianState& s, const Matrix& pi) { return qem_affine_bound(s, sym(pi)); },
      py::arg("state"), py::arg("pi"));

  m.def(
      "ordered_moment", [](const std::vector<int>& g, const GaussianState& s) { return ordered_moment(index(g), s); },
      py::arg("gamma"), py::arg("state"));
  m.def(
      "symmetrized_moment",
      [](const std::vector<int>& a, const GaussianState& s) { return weyl_symmetrized_moment(index(a), s); },
      py::arg("alpha"), py::arg("state"));
  m.def(
      "wick_oracle",
      [](const std::vector<int>& a, const GaussianState& s, const std::string& ordering) {
        return wick_oracle(index(a), s.mean(), {s.cov(), s.ccr()}, parse_wick_ordering(ordering));
      },
      py::arg("alpha"), py::arg("state"), py::arg("ordering") = "ordered");
  m.def(
      "quantize_quadratic",
      [](const Vector& beta, const Matrix& r, const Matrix& ccr) {
        const WeylPolynomial p = quantize_quadratic({beta, sym(r)}, AntisymMatrix::from_dense(ccr)).pruned();
        py::dict out;
        for (const auto& [g, c] : p.terms()) out[py::tuple(py::cast(g.entries()))] = c;
        return out;
      },
      py::arg("beta"), py::arg("r"), py::arg("ccr"), "Ordered-monomial coefficients keyed by multi-index.");

  m.def(
      "fock_char",
      [](double nbar, double s, double phi, Complex alpha, const Vector& lam, int levels) {
        return oracle_char(gaussian_density({nbar, s, phi, alpha, levels}), lam);
      },
      py::arg("nbar"), py::arg("s"), py::arg("phi"), py::arg("alpha"), py::arg("lam"), py::arg("levels") = 60);
  m.def(
      "fock_ordered_moment",
      [](double nbar, double s, double phi, Complex alpha, const std::vector<int>& g, int levels) {
        return oracle_ordered_moment(gaussian_density({nbar, s, phi, alpha, levels}), index(g)).value;
      },
      py::arg("nbar"), py::arg("s"), py::arg("phi"), py::arg("alpha"), py::arg("gamma"), py::arg("levels") = 60);
  m.def(
      "fock_implied_state",
      [](double nbar, double s, double phi, Complex alpha) { return implied_state({nbar, s, phi, alpha, 60}); },
      py::arg("nbar") = 0.0, py::arg("s") = 0.0, py::arg("phi") = 0.0, py::arg("alpha") = Complex{});

  m.def("criterion_names", &criterion_names);
  m.def(
      "run_suite",
      [](const std::string& config_json) {
        const SuiteConfig c = config_json.empty() ? default_suite_config()
                                                  : suite_config_from_json(io::parse(config_json, "suite config"));
        py::gil_scoped_release release;
        return run_suite(c).dump();
      },
      py::arg("config") = "", "Runs the acceptance suite and returns the report JSON text.");
}
