#include "weylprice/io.hpp"

#include "weylprice/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace weylprice::io {

namespace {

std::string in_quotes(std::string_view s) { return "'" + std::string(s) + "'"; }

const Json& field(const Json& j, const char* key, std::string_view what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing key " + in_quotes(key));
  return *it;
}

double number(const Json& j, std::string_view what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number, got " + j.dump());
  return j.get<double>();
}

int integer(const Json& j, std::string_view what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + ": expected an integer, got " + j.dump());
  return j.get<int>();
}

}  // namespace

Json parse(std::string_view text, std::string_view where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.what() carries "at line L, column C".
    throw InputError("malformed JSON in " + std::string(where) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + in_quotes(path));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

Json load_json_arg(const std::string& spec, std::string_view what) {
  const auto first = spec.find_first_not_of(" \t\n");
  if (first != std::string::npos && (spec[first] == '{' || spec[first] == '['))
    return parse(spec, what);
  return read_file(spec);
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const SymMatrix& m) { return to_json(m.dense()); }
Json to_json(const AntisymMatrix& m) { return to_json(m.dense()); }
Json to_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json to_json(const ExactComplex& c) {
  const Complex d = c.to_complex();
  return Json{{"re", d.real()}, {"im", d.imag()}, {"exact", c.str()}};
}

Vector vector_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = number(j[i], std::string(what) + "[" + std::to_string(i) + "]");
  return v;
}

Matrix matrix_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  Matrix m(rows, static_cast<Eigen::Index>(j[0].is_array() ? j[0].size() : 0));
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string where = std::string(what) + "[" + std::to_string(i) + "]";
    const Vector row = vector_from_json(j[static_cast<std::size_t>(i)], where);
    if (row.size() != m.cols()) throw InputError(where + ": ragged matrix row");
    m.row(i) = row.transpose();
  }
  return m;
}

SymMatrix sym_from_json(const Json& j, std::string_view what) {
  const Matrix m = matrix_from_json(j, what);
  if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix is not square");
  try {
    return SymMatrix::from_dense(m, 1e-12);
  } catch (const Error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

AntisymMatrix antisym_from_json(const Json& j, std::string_view what) {
  const Matrix m = matrix_from_json(j, what);
  if (m.rows() != m.cols()) throw InputError(std::string(what) + ": matrix is not square");
  try {
    return AntisymMatrix::from_dense(m, 1e-12);
  } catch (const Error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

MultiIndex multi_index_from_json(const Json& j, std::string_view what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of integers");
  std::vector<int> entries;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int e = integer(j[i], what);
    if (e < 0) throw InputError(std::string(what) + ": negative multi-index entry");
    entries.push_back(e);
  }
  return MultiIndex(std::move(entries));
}

Json to_json(const GaussianState& state) {
  return Json{{"dim", state.dim()},
              {"mean", to_json(state.mean())},
              {"cov", to_json(state.cov())},
              {"ccr", to_json(state.ccr())}};
}

GaussianState state_from_json(const Json& j) {
  const Vector mean = vector_from_json(field(j, "mean", "state"), "state.mean");
  const SymMatrix cov = sym_from_json(field(j, "cov", "state"), "state.cov");
  const AntisymMatrix ccr =
      j.contains("ccr") ? antisym_from_json(j["ccr"], "state.ccr") : AntisymMatrix::zero(cov.order());
  if (j.contains("dim") && integer(j["dim"], "state.dim") != mean.size())
    throw InputError("state.dim does not match the length of state.mean");
  try {
    return GaussianState(mean, cov, ccr);
  } catch (const DimensionError& e) {
    throw InputError(std::string("state: ") + e.what());
  }
}

bool is_named_state(std::string_view name) {
  return name == "vacuum2" || name.starts_with("thermal2:") || name.starts_with("classical:");
}

GaussianState named_state(std::string_view name) {
  if (name == "vacuum2") return GaussianState::vacuum();
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) throw InputError("unknown state name " + in_quotes(name));
  const std::string_view head = name.substr(0, colon);
  const std::string arg(name.substr(colon + 1));
  try {
    std::size_t used = 0;
    if (head == "thermal2") {
      const double nbar = std::stod(arg, &used);
      if (used != arg.size() || nbar < 0.0) throw InputError("");
      return GaussianState::thermal(nbar);
    }
    if (head == "classical") {
      const int n = std::stoi(arg, &used);
      if (used != arg.size() || n < 1 || n > kMaxDim) throw InputError("");
      return GaussianState::standard(n);
    }
  } catch (const std::exception&) {
    throw InputError("bad parameter in state name " + in_quotes(name));
  }
  throw InputError("unknown state name " + in_quotes(name));
}

GaussianState load_state(const std::string& spec) {
  if (is_named_state(spec)) return named_state(spec);
  return state_from_json(load_json_arg(spec, "--state"));
}

Json to_json(const TestFunction& f) {
  using TF = TestFunction;
  switch (f.kind()) {
    case TF::Kind::quadratic: {
      const auto& q = std::get<TF::Quadratic>(f.data()).form;
      return Json{{"kind", "quadratic"}, {"beta", to_json(q.linear)}, {"r", to_json(q.quadratic)}};
    }
    case TF::Kind::gaussian_exponential:
      return Json{{"kind", "gaussian_exponential"},
                  {"pi", to_json(std::get<TF::GaussianExponential>(f.data()).pi)}};
    case TF::Kind::exponential:
      return Json{{"kind", "exponential"}, {"lambda", to_json(std::get<TF::Exponential>(f.data()).lambda)}};
    case TF::Kind::polynomial: {
      const auto& p = std::get<TF::Polynomial>(f.data());
      Json terms = Json::array();
      for (const auto& [index, c] : p.coeffs) terms.push_back(Json{{"index", index.entries()}, {"coeff", c}});
      return Json{{"kind", "polynomial"}, {"dim", p.dim}, {"terms", std::move(terms)}};
    }
    case TF::Kind::callable: {
      const auto& c = std::get<TF::Callable>(f.data());
      // The function body itself has no serial form.
      return Json{{"kind", "callable"}, {"dim", c.dim}, {"smoothness", c.smoothness},
                  {"growth_bound", c.growth_bound}};
    }
  }
  return {};
}

TestFunction test_function_from_json(const Json& j) {
  const Json& kind_j = field(j, "kind", "function");
  if (!kind_j.is_string()) throw InputError("function.kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  try {
    if (kind == "quadratic") {
      QuadraticForm q{vector_from_json(field(j, "beta", "function"), "function.beta"),
                      sym_from_json(field(j, "r", "function"), "function.r")};
      return TestFunction::quadratic(std::move(q));
    }
    if (kind == "gaussian_exponential")
      return TestFunction::gaussian_exponential(sym_from_json(field(j, "pi", "function"), "function.pi"));
    if (kind == "exponential")
      return TestFunction::exponential(vector_from_json(field(j, "lambda", "function"), "function.lambda"));
    if (kind == "polynomial") {
      const int dim = integer(field(j, "dim", "function"), "function.dim");
      std::map<MultiIndex, double> coeffs;
      const Json& terms = field(j, "terms", "function");
      if (!terms.is_array()) throw InputError("function.terms must be an array");
      for (const Json& t : terms)
        coeffs[multi_index_from_json(field(t, "index", "term"), "term.index")] +=
            number(field(t, "coeff", "term"), "term.coeff");
      return TestFunction::polynomial(dim, std::move(coeffs));
    }
  } catch (const AdmissibilityError& e) {
    throw InputError(std::string("function: ") + e.what());
  } catch (const DimensionError& e) {
    throw InputError(std::string("function: ") + e.what());
  }
  if (kind == "callable") throw InputError("callable functions cannot be loaded from JSON");
  throw InputError("unknown function kind " + in_quotes(kind));
}

Json to_json(const FourierSymbol& symbol) {
  switch (symbol.kind()) {
    case FourierSymbol::Kind::gaussian:
      return Json{{"kind", "gaussian"}, {"pi", to_json(std::get<FourierSymbol::Gaussian>(symbol.data()).pi)}};
    case FourierSymbol::Kind::plane_wave: {
      const auto& pw = std::get<FourierSymbol::PlaneWave>(symbol.data());
      return Json{{"kind", "plane_wave"},
                  {"x0", to_json(pw.x0)},
                  {"phase", pw.phase == FourierSymbol::Phase::cos ? "cos" : "sin"}};
    }
    case FourierSymbol::Kind::grid:
      return Json{{"kind", "grid"}, {"dim", symbol.dim()}, {"weighted_integrable", symbol.weighted_integrable()}};
  }
  return {};
}

FourierSymbol symbol_from_json(const Json& j) {
  const Json& kind_j = field(j, "kind", "symbol");
  if (!kind_j.is_string()) throw InputError("symbol.kind must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "gaussian") {
    try {
      return FourierSymbol::gaussian(sym_from_json(field(j, "pi", "symbol"), "symbol.pi"));
    } catch (const AdmissibilityError& e) {
      throw InputError(std::string("symbol.pi: ") + e.what());
    }
  }
  if (kind == "plane_wave") {
    auto phase = FourierSymbol::Phase::cos;
    if (j.contains("phase")) {
      const std::string p = j["phase"].is_string() ? j["phase"].get<std::string>() : "";
      if (p == "sin") phase = FourierSymbol::Phase::sin;
      else if (p != "cos") throw InputError("symbol.phase must be \"cos\" or \"sin\"");
    }
    return FourierSymbol::plane_wave(vector_from_json(field(j, "x0", "symbol"), "symbol.x0"), phase);
  }
  if (kind == "grid") throw InputError("grid symbols cannot be loaded from JSON");
  throw InputError("unknown symbol kind " + in_quotes(kind));
}

Json to_json(const WeylPolynomial& p) {
  Json out = Json::array();
  for (const auto& [index, c] : p.terms())
    out.push_back(Json{{"index", index.entries()}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

WeylPolynomial weyl_polynomial_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw InputError("Weyl polynomial: expected an array of terms");
  WeylPolynomial p(dim);
  for (const Json& t : j) {
    const MultiIndex index = multi_index_from_json(field(t, "index", "term"), "term.index");
    if (index.size() != dim) throw InputError("term.index has the wrong length");
    p.add(index, {number(field(t, "re", "term"), "term.re"), number(field(t, "im", "term"), "term.im")});
  }
  return p;
}

Json to_json(const MomentEstimate& e) {
  Json out{{"value", e.value}, {"method", std::string(to_string(e.method))},
           {"nodes_or_samples", e.nodes_or_samples}};
  out["stderr"] = e.std_error ? Json(*e.std_error) : Json(nullptr);
  return out;
}

Json to_json(const QuantumPriceResiduals& r) {
  return Json{{"mean", to_json(r.mean)},
              {"cov", to_json(r.cov)},
              {"mixed", to_json(r.mixed)},
              {"mean_norm", r.mean_norm()},
              {"cov_norm", r.cov_norm()},
              {"mixed_norm", r.mixed_norm()}};
}

Json to_json(const QemVerification& v) {
  return Json{{"value", v.value},
              {"h", v.h},
              {"analytic", to_json(v.analytic)},
              {"mean_hessian", to_json(v.mean_hessian)},
              {"twice_frechet", to_json(v.twice_frechet)},
              {"dev_analytic_hessian", v.dev_analytic_hessian},
              {"dev_analytic_frechet", v.dev_analytic_frechet},
              {"dev_hessian_frechet", v.dev_hessian_frechet}};
}

Json to_json(const QemProblem& problem) {
  return Json{{"state", to_json(problem.state)}, {"pi", to_json(problem.pi)}};
}

QemProblem qem_problem_from_json(const Json& j) {
  GaussianState state = state_from_json(field(j, "state", "problem"));
  SymMatrix pi = sym_from_json(field(j, "pi", "problem"), "problem.pi");
  try {
    return QemProblem(std::move(state), std::move(pi));
  } catch (const DimensionError& e) {
    throw InputError(std::string("problem: ") + e.what());
  }
}

Json to_json(const DensityParams& params) {
  return Json{{"nbar", params.nbar},         {"s", params.s},
              {"phi", params.phi},           {"alpha_re", params.alpha.real()},
              {"alpha_im", params.alpha.imag()}, {"N", params.levels}};
}

DensityParams density_params_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("density parameters: expected a JSON object");
  DensityParams p;
  if (j.contains("nbar")) p.nbar = number(j["nbar"], "nbar");
  if (j.contains("s")) p.s = number(j["s"], "s");
  if (j.contains("phi")) p.phi = number(j["phi"], "phi");
  double re = 0.0;
  double im = 0.0;
  if (j.contains("alpha_re")) re = number(j["alpha_re"], "alpha_re");
  if (j.contains("alpha_im")) im = number(j["alpha_im"], "alpha_im");
  p.alpha = {re, im};
  if (j.contains("N")) p.levels = integer(j["N"], "N");
  if (p.nbar < 0.0) throw InputError("nbar must be nonnegative");
  return p;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace weylprice::io
