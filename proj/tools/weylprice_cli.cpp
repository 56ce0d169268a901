// weylprice: command-line front end. The only thing written to stdout is the
// Report (JSON, or CSV with --csv); diagnostics go to stderr.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 input error.

#include "weylprice/acceptance.hpp"
#include "weylprice/algebra.hpp"
#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"
#include "weylprice/fock.hpp"
#include "weylprice/io.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/qem.hpp"
#include "weylprice/report.hpp"
#include "weylprice/weyl.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace weylprice;
using io::Json;

struct Options {
  std::string state;
  std::string symbol;
  std::string function;
  std::string pi;
  std::string mode = "quantum";
  std::string ordering = "ordered";
  std::string config;
  std::string out;
  std::vector<int> index;
  double h = 1e-3;
  int order = 40;
  std::uint64_t seed = 20240917;
  std::uint64_t samples = 0;
  bool csv = false;
  bool timing = false;
  // fock-verify
  std::string params;
  double nbar = 0.0;
  double s = 0.0;
  double phi = 0.0;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  int levels = 60;
  int grid = 21;
  double extent = 3.0;
  int max_degree = 4;
};

/// Input problems detected after argument parsing; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GaussianState need_state(const Options& o) {
  if (o.state.empty()) throw UsageError("--state is required");
  return io::load_state(o.state);
}

QuadratureScheme scheme_of(const Options& o) { return QuadratureScheme::from_env(o.order); }

SymMatrix load_pi(const Options& o, int dim) {
  if (o.pi.empty() || o.pi == "identity") return SymMatrix::identity(dim);
  return io::sym_from_json(io::load_json_arg(o.pi, "--pi"), "--pi");
}

// Classical f for the classical Price check: the symbol's inverse transform
// when --symbol is given, otherwise --function.
TestFunction function_for_price(const Options& o) {
  if (!o.function.empty()) return io::test_function_from_json(io::load_json_arg(o.function, "--function"));
  if (o.symbol.empty()) throw UsageError("price-check needs --symbol or --function");
  const FourierSymbol sym = io::symbol_from_json(io::load_json_arg(o.symbol, "--symbol"));
  switch (sym.kind()) {
    case FourierSymbol::Kind::gaussian:
      return TestFunction::gaussian_exponential(std::get<FourierSymbol::Gaussian>(sym.data()).pi);
    case FourierSymbol::Kind::plane_wave: {
      const auto pw = std::get<FourierSymbol::PlaneWave>(sym.data());
      const bool is_cos = pw.phase == FourierSymbol::Phase::cos;
      return TestFunction::callable(static_cast<int>(pw.x0.size()), [pw, is_cos](const Vector& x) {
        return is_cos ? std::cos(pw.x0.dot(x)) : std::sin(pw.x0.dot(x));
      });
    }
    case FourierSymbol::Kind::grid:
      break;
  }
  throw UsageError("unsupported symbol kind for price-check");
}

Report cmd_validate(const Options& o) {
  const GaussianState state = need_state(o);
  const ValidityMode mode = parse_validity_mode(o.mode);
  const ValidityVerdict v = validate(state, mode);
  Report r;
  r.inputs = {{"state", io::to_json(state)}, {"mode", std::string(to_string(mode))}};
  // classical and quantum_strict need min eig > tol; quantum needs min eig ≥ −tol.
  const double bound = mode == ValidityMode::quantum ? -v.tolerance : v.tolerance;
  Check c = make_check("min_eigenvalue", v.min_eigenvalue, bound, std::max(0.0, bound - v.min_eigenvalue), 0.0,
                       {{"mode", std::string(to_string(mode))}});
  c.pass = v.pass;
  r.checks.push_back(std::move(c));
  return r;
}

// Closed-form reference for E f(X) when one exists.
std::optional<double> closed_form(const TestFunction& f, const GaussianState& state) {
  using TF = TestFunction;
  switch (f.kind()) {
    case TF::Kind::quadratic:
      return std::get<TF::Quadratic>(f.data()).form.expectation(state.mean(), state.cov());
    case TF::Kind::exponential:
      return mgf(state, std::get<TF::Exponential>(f.data()).lambda);
    case TF::Kind::gaussian_exponential:
      return qem_closed(QemProblem(state, std::get<TF::GaussianExponential>(f.data()).pi));
    case TF::Kind::polynomial: {
      const GaussianState classical = state.with_ccr(AntisymMatrix::zero(state.dim()));
      double sum = 0.0;
      for (const auto& [g, c] : std::get<TF::Polynomial>(f.data()).coeffs)
        sum += c * ordered_moment(g, classical).real();
      return sum;
    }
    case TF::Kind::callable:
      break;
  }
  return std::nullopt;
}

Report cmd_moment(const Options& o) {
  const GaussianState state = need_state(o);
  if (o.function.empty()) throw UsageError("moment needs --function");
  const TestFunction f = io::test_function_from_json(io::load_json_arg(o.function, "--function"));
  const GaussianState classical = state.with_ccr(AntisymMatrix::zero(state.dim()));
  Report r;
  r.inputs = {{"state", io::to_json(state)}, {"function", io::to_json(f)}, {"order", o.order}};
  MomentEstimate est;
  double tol = 1e-8;
  if (o.samples > 0) {
    est = expect_monte_carlo(f, classical, o.samples, o.seed);
    r.seed = o.seed;
    r.inputs["samples"] = o.samples;
    tol = 5.0 * *est.std_error;
  } else {
    est = expect_quadrature(f, classical, scheme_of(o));
  }
  const std::optional<double> ref = closed_form(f, classical);
  Json detail = io::to_json(est);
  detail["formatted"] = io::format_double(est.value);
  if (ref) {
    const double scale = o.samples > 0 ? 1.0 : std::max(1.0, std::abs(*ref));
    r.checks.push_back(make_check("moment", est.value, *ref, std::abs(est.value - *ref) / scale, tol, detail));
  } else {
    r.checks.push_back(make_check("moment", est.value, nullptr, 0.0, tol, detail));
  }
  return r;
}

Report cmd_price_check(const Options& o) {
  const GaussianState state = need_state(o);
  const TestFunction f = function_for_price(o);
  // The classical Price identities act on (μ, Σ); Θ plays no role.
  const GaussianState classical = state.with_ccr(AntisymMatrix::zero(state.dim()));
  require(classical, ValidityMode::classical);
  const QuadratureScheme scheme = scheme_of(o);
  const double tol = f.analytic_derivatives() ? 1e-4 : kCallableTolerance;
  Report r;
  r.inputs = {{"state", io::to_json(state)}, {"function", io::to_json(f)}, {"h", o.h}, {"order", o.order}};
  const Vector rm = price_mean_residual(f, classical, o.h, scheme);
  const SymMatrix rc = price_cov_residual(f, classical, o.h, scheme);
  const Json detail{{"h", o.h}, {"order", o.order}};
  Json dm = detail, dc = detail;
  dm["residual_vector"] = io::to_json(rm);
  dc["residual_matrix"] = io::to_json(rc);
  r.checks.push_back(make_check("price_mean", max_norm(rm), 0.0, max_norm(rm), tol, dm));
  r.checks.push_back(make_check("price_cov", max_norm(rc), 0.0, max_norm(rc), tol, dc));
  return r;
}

Report cmd_quantum_price_check(const Options& o) {
  const GaussianState state = need_state(o);
  if (o.symbol.empty()) throw UsageError("quantum-price-check needs --symbol");
  const FourierSymbol sym = io::symbol_from_json(io::load_json_arg(o.symbol, "--symbol"));
  const QuantumPriceResiduals q = quantum_price_residuals(sym, state, o.h, scheme_of(o));
  Report r;
  r.inputs = {{"state", io::to_json(state)}, {"symbol", io::to_json(sym)}, {"h", o.h}, {"order", o.order}};
  const Json detail{{"h", o.h}, {"order", o.order}, {"residuals", io::to_json(q)}};
  r.checks.push_back(make_check("mean_identity", q.mean_norm(), 0.0, q.mean_norm(), 1e-4, detail));
  r.checks.push_back(make_check("cov_identity", q.cov_norm(), 0.0, q.cov_norm(), 1e-4));
  r.checks.push_back(make_check("mixed_identity", q.mixed_norm(), 0.0, q.mixed_norm(), 1e-4));
  return r;
}

Report cmd_qem(const Options& o) {
  const GaussianState state = need_state(o);
  const QemProblem problem(state, load_pi(o, state.dim()));
  Report r;
  r.inputs = {{"problem", io::to_json(problem)}, {"h", o.h}, {"order", o.order}};
  const double g = qem_closed(problem);
  const double quad = weyl_expectation(FourierSymbol::gaussian(problem.pi), state, scheme_of(o));
  r.checks.push_back(make_check("qem_closed", g, quad, std::abs(g - quad), 1e-6,
                                {{"formatted", io::format_double(g)}, {"psi", io::to_json(psi(state.cov(), problem.pi))}}));
  const double bound = qem_affine_bound(state, problem.pi);
  r.checks.push_back(at_least("lower_bound", g, bound));
  if (validate(state, ValidityMode::quantum_strict).pass) {
    const QemVerification v = qem_price_verify(problem, o.h);
    r.checks.push_back(make_check("price_verify", v.max_deviation(), 0.0, v.max_deviation(), 1e-5, io::to_json(v)));
  }
  return r;
}

Report cmd_algebra(const Options& o) {
  const GaussianState state = need_state(o);
  Report r;
  r.inputs = {{"state", io::to_json(state)}};
  if (!o.function.empty()) {
    const TestFunction f = io::test_function_from_json(io::load_json_arg(o.function, "--function"));
    if (f.kind() != TestFunction::Kind::quadratic) throw UsageError("algebra --function takes a quadratic form");
    const QuadraticForm& qf = std::get<TestFunction::Quadratic>(f.data()).form;
    const WeylPolynomial poly = quantize_quadratic(qf, state.ccr()).pruned();
    const Complex e = poly.expectation(state);
    const double ref = qf.expectation(state.mean(), state.cov());
    r.inputs["function"] = io::to_json(f);
    r.checks.push_back(make_check("quantized_expectation", io::to_json(e), ref, std::abs(e - ref), 1e-10,
                                  {{"polynomial", io::to_json(poly)}}));
    return r;
  }
  if (o.index.empty()) throw UsageError("algebra needs --index or --function");
  const MultiIndex gamma(o.index);
  if (gamma.size() != state.dim()) throw UsageError("--index length must equal the state dimension");
  for (int e : o.index)
    if (e < 0) throw UsageError("--index entries must be nonnegative");
  const WickOrdering ordering = parse_wick_ordering(o.ordering);
  r.inputs["index"] = o.index;
  r.inputs["ordering"] = std::string(to_string(ordering));
  const ExactComplex m = ordering == WickOrdering::ordered ? ordered_moment_exact(gamma, state)
                                                           : weyl_symmetrized_moment_exact(gamma, state);
  const ExactComplex oracle =
      wick_oracle_exact(gamma, state.mean(), {state.cov(), state.ccr()}, ordering);
  const double residual = std::abs((m - oracle).to_complex());
  Check c = make_check("moment", io::to_json(m), io::to_json(oracle), residual, 0.0);
  c.pass = m == oracle;
  r.checks.push_back(std::move(c));
  return r;
}

Report cmd_fock_verify(const Options& o) {
  DensityParams p;
  if (!o.params.empty()) {
    p = io::density_params_from_json(io::load_json_arg(o.params, "--params"));
  } else {
    p.nbar = o.nbar;
    p.s = o.s;
    p.phi = o.phi;
    p.alpha = {o.alpha_re, o.alpha_im};
    p.levels = o.levels;
  }
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  const GaussianDensityMatrix rho = gaussian_density(p);
  const GaussianState state = rho.implied_state();
  Report r;
  r.inputs = {{"params", io::to_json(p)}, {"grid", o.grid}, {"extent", o.extent}, {"max_degree", o.max_degree}};

  double char_dev = 0.0;
  for (int a = 0; a < o.grid; ++a)
    for (int b = 0; b < o.grid; ++b) {
      Vector l(2);
      l << -o.extent + 2 * o.extent * a / (o.grid - 1), -o.extent + 2 * o.extent * b / (o.grid - 1);
      char_dev = std::max(char_dev, std::abs(oracle_char(rho, l) - quasi_char(state, l)));
    }
  r.checks.push_back(make_check("char_deviation", char_dev, 0.0, char_dev, 1e-6,
                                {{"N", p.levels}, {"tail_mass", rho.tail_mass}, {"implied_state", io::to_json(state)}}));

  DensityParams fine = p;
  fine.levels = std::max(p.levels, 40 + 10 * o.max_degree);
  const GaussianDensityMatrix rho_fine = fine.levels == p.levels ? rho : gaussian_density(fine);
  double moment_dev = 0.0;
  bool warned = false;
  for (int d = 0; d <= o.max_degree; ++d)
    for (const MultiIndex& g : multi_indices_of_degree(2, d)) {
      const OracleMoment om = oracle_ordered_moment(rho_fine, g);
      warned = warned || om.truncation_warning;
      moment_dev = std::max(moment_dev, std::abs(om.value - ordered_moment(g, state)));
    }
  r.checks.push_back(make_check("moment_deviation", moment_dev, 0.0, moment_dev, 1e-8,
                                {{"N", fine.levels}, {"tail_mass", rho_fine.tail_mass}, {"truncation_warning", warned}}));
  const double ccr = ccr_interior_residual(build_qp(p.levels));
  r.checks.push_back(make_check("ccr_interior", ccr, 0.0, ccr, 1e-10));
  return r;
}

Report cmd_suite(const Options& o, const CLI::Option* seed_opt) {
  if (o.config.empty()) throw UsageError("suite needs --config");
  SuiteConfig config = suite_config_from_json(io::read_file(o.config));
  if (seed_opt->count() > 0) config.seed = o.seed;
  return run_suite(config, o.timing);
}

void emit(const Report& r, const Options& o) {
  const std::string text = o.csv ? r.csv() : r.dump();
  if (o.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized moments of classical and quantum Gaussian variables, with Price-identity checks"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
    sub->add_flag("--csv", o.csv, "Emit the check table as CSV");
  };
  auto state_opt = [&](CLI::App* sub) {
    sub->add_option("--state", o.state, "State JSON file, inline JSON, or vacuum2 | thermal2:<nbar> | classical:<n>");
  };
  auto numeric = [&](CLI::App* sub) {
    sub->add_option("--h", o.h, "Finite-difference step")->check(CLI::PositiveNumber);
    sub->add_option("--order", o.order, "Gauss-Hermite points per axis")->check(CLI::Range(2, 400));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check classical or quantum admissibility of a state");
  state_opt(validate_cmd);
  validate_cmd->add_option("--mode", o.mode, "classical | quantum | quantum_strict");
  common(validate_cmd);

  auto* moment_cmd = app.add_subcommand("moment", "E f(X) by quadrature or Monte Carlo");
  state_opt(moment_cmd);
  moment_cmd->add_option("--function", o.function, "Test function JSON");
  moment_cmd->add_option("--samples", o.samples, "Monte Carlo sample count (0: quadrature)");
  moment_cmd->add_option("--seed", o.seed, "Monte Carlo seed");
  numeric(moment_cmd);
  common(moment_cmd);

  auto* price_cmd = app.add_subcommand("price-check", "Classical Price identities for E f(X) in (mu, Sigma)");
  state_opt(price_cmd);
  price_cmd->add_option("--symbol", o.symbol, "Fourier symbol JSON (gaussian or plane_wave)");
  price_cmd->add_option("--function", o.function, "Test function JSON");
  numeric(price_cmd);
  common(price_cmd);

  auto* qprice_cmd = app.add_subcommand("quantum-price-check", "Quantum Price identities; needs Sigma + i Theta > 0");
  state_opt(qprice_cmd);
  qprice_cmd->add_option("--symbol", o.symbol, "Fourier symbol JSON");
  numeric(qprice_cmd);
  common(qprice_cmd);

  auto* qem_cmd = app.add_subcommand("qem", "Quadratic-exponential moment E exp(-X^T Pi X / 2)");
  state_opt(qem_cmd);
  qem_cmd->add_option("--pi", o.pi, "Pi as JSON matrix, file, or 'identity'");
  numeric(qem_cmd);
  common(qem_cmd);

  auto* algebra_cmd = app.add_subcommand("algebra", "Exact ordered or symmetrized moments against the Wick oracle");
  state_opt(algebra_cmd);
  algebra_cmd->add_option("--index", o.index, "Multi-index gamma")->delimiter(',');
  algebra_cmd->add_option("--ordering", o.ordering, "ordered | symmetrized");
  algebra_cmd->add_option("--function", o.function, "Quadratic form to quantize");
  common(algebra_cmd);

  auto* fock_cmd = app.add_subcommand("fock-verify", "Truncated Fock-space oracle for one mode");
  fock_cmd->add_option("--params", o.params, "Density parameter JSON");
  fock_cmd->add_option("--nbar", o.nbar, "Thermal occupation")->check(CLI::NonNegativeNumber);
  fock_cmd->add_option("--s", o.s, "Squeezing parameter");
  fock_cmd->add_option("--phi", o.phi, "Rotation angle");
  fock_cmd->add_option("--alpha-re", o.alpha_re, "Displacement, real part");
  fock_cmd->add_option("--alpha-im", o.alpha_im, "Displacement, imaginary part");
  fock_cmd->add_option("--N", o.levels, "Fock truncation");
  fock_cmd->add_option("--grid", o.grid, "Lambda grid points per axis");
  fock_cmd->add_option("--extent", o.extent, "Lambda grid half-width");
  fock_cmd->add_option("--max-degree", o.max_degree, "Largest |gamma| for moment checks")->check(CLI::Range(0, 6));
  common(fock_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance suite described by a config file");
  suite_cmd->add_option("--config", o.config, "Suite config JSON");
  auto* suite_seed = suite_cmd->add_option("--seed", o.seed, "Override the config seed");
  suite_cmd->add_flag("--timing", o.timing, "Record runtimes (reports are then not byte-stable)");
  common(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string argv_echo = [&] {
    std::string s;
    for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
    return s;
  }();

  try {
    Report r;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "validate") r = cmd_validate(o);
    else if (name == "moment") r = cmd_moment(o);
    else if (name == "price-check") r = cmd_price_check(o);
    else if (name == "quantum-price-check") r = cmd_quantum_price_check(o);
    else if (name == "qem") r = cmd_qem(o);
    else if (name == "algebra") r = cmd_algebra(o);
    else if (name == "fock-verify") r = cmd_fock_verify(o);
    else r = cmd_suite(o, suite_seed);
    if (name != "suite") r.command = argv_echo;
    emit(r, o);
    return r.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  }
  return 2;
}
