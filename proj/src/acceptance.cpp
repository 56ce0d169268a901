#include "weylprice/acceptance.hpp"

#include "weylprice/algebra.hpp"
#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"
#include "weylprice/fock.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/qem.hpp"
#include "weylprice/sampling.hpp"
#include "weylprice/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace weylprice {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Criterion {
  double time_limit;
  std::function<std::vector<Check>(const json&, RngStream&)> run;
};

SymMatrix random_sym(RngStream& rng, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = rng.normal();
  return SymMatrix::symmetric_part(m);
}

// Worst-case accumulator that remembers which case produced the maximum.
struct Worst {
  double value = 0.0;
  json where = nullptr;
  void update(double v, const json& w) {
    if (!(v <= value)) {  // NaN propagates
      value = v;
      where = w;
    }
  }
};

Check worst_check(const std::string& name, const Worst& w, double tol, json detail = json::object()) {
  detail["worst_case"] = w.where;
  return make_check(name, w.value, 0.0, w.value, tol, std::move(detail));
}

// Classical Price identities.

std::vector<Check> classical_price(const json& p, RngStream& rng) {
  const int states = p.value("states", 20);
  const double h = p.value("h", 1e-3);
  const double tol = p.value("tolerance", 1e-4);
  const double min_ratio = p.value("min_shrink_ratio", 3.0);
  const double floor = p.value("shrink_floor", 1e-9);
  const QuadratureScheme scheme{p.value("order", 32)};

  Worst mean_res, cov_res;
  double worst_ratio = kInf;
  json ratio_case = nullptr;
  int shrink_cases = 0;
  for (int s = 0; s < states; ++s) {
    const int n = 1 + s % 3;
    const GaussianState state = random_classical_state(rng, n);
    const std::vector<TestFunction> fs = {
        TestFunction::quadratic({random_vector(rng, n), random_sym(rng, n)}),
        TestFunction::gaussian_exponential(random_spd(rng, n, 0.2) * 0.5),
        TestFunction::exponential(random_vector(rng, n, 0.4)),
    };
    for (const TestFunction& f : fs) {
      const json where{{"state", s}, {"dim", n}, {"function", std::string(f.kind_name())}};
      const double rm = max_norm(price_mean_residual(f, state, h, scheme));
      const double rc = max_norm(price_cov_residual(f, state, h, scheme));
      mean_res.update(rm, where);
      cov_res.update(rc, where);
      if (f.is_polynomial()) continue;  // exact differences: residual is roundoff only
      const double coarse = std::max(rm, rc);
      if (coarse <= floor) continue;
      const double fine = std::max(max_norm(price_mean_residual(f, state, h / 2, scheme)),
                                   max_norm(price_cov_residual(f, state, h / 2, scheme)));
      const double ratio = coarse / fine;
      ++shrink_cases;
      if (ratio < worst_ratio) {
        worst_ratio = ratio;
        ratio_case = where;
      }
    }
  }
  const json detail{{"h", h}, {"order", scheme.order}, {"states", states}};
  std::vector<Check> out{worst_check("mean_residual", mean_res, tol, detail),
                         worst_check("cov_residual", cov_res, tol, detail)};
  if (shrink_cases == 0)
    out.push_back(failed_check("shrinkage", "no case had a residual above the roundoff floor"));
  else
    out.push_back(at_least("shrinkage", worst_ratio, min_ratio,
                           {{"cases", shrink_cases}, {"worst_case", ratio_case}, {"floor", floor}}));
  return out;
}

// MGF closed form.

std::vector<Check> mgf_closed_form(const json& p, RngStream& rng) {
  const int pairs = p.value("pairs", 50);
  const double tol = p.value("tolerance", 1e-8);
  const QuadratureScheme scheme{p.value("order", 40)};
  Worst rel;
  for (int i = 0; i < pairs; ++i) {
    const int n = 1 + i % 3;
    const GaussianState state = random_classical_state(rng, n);
    const Vector lambda = random_vector(rng, n, 0.5);
    const double closed = mgf(state, lambda);
    const double quad = expect_quadrature(TestFunction::exponential(lambda), state, scheme).value;
    rel.update(std::abs(closed - quad) / std::abs(closed), {{"pair", i}, {"dim", n}});
  }
  return {worst_check("relative_error", rel, tol, {{"pairs", pairs}, {"order", scheme.order}})};
}

// Quantum Price identities.

std::vector<Check> quantum_price(const json& p, RngStream& rng) {
  const int states = p.value("states", 20);
  const double h = p.value("h", 1e-3);
  const double tol = p.value("tolerance", 1e-4);
  const int order2 = p.value("order_n2", 30);
  const int order4 = p.value("order_n4", 20);
  Worst mean_res, cov_res, mixed_res;
  for (int s = 0; s < states; ++s) {
    const int n = s < states / 2 ? 2 : 4;
    const AntisymMatrix theta = AntisymMatrix::canonical(n, 0.5 * rng.uniform(0.5, 1.5));
    const GaussianState state = random_quantum_state(rng, theta, 0.1);
    const FourierSymbol symbol = FourierSymbol::gaussian(random_spd(rng, n, 0.2));
    const QuadratureScheme scheme{n == 2 ? order2 : order4};
    const QuantumPriceResiduals r = quantum_price_residuals(symbol, state, h, scheme);
    const json where{{"state", s}, {"dim", n}};
    mean_res.update(r.mean_norm(), where);
    cov_res.update(r.cov_norm(), where);
    mixed_res.update(r.mixed_norm(), where);
  }
  const json detail{{"h", h}, {"order_n2", order2}, {"order_n4", order4}, {"states", states}};
  return {worst_check("mean_residual", mean_res, tol, detail),
          worst_check("cov_residual", cov_res, tol, detail),
          worst_check("mixed_residual", mixed_res, tol, detail)};
}

// QEM closed form.

GaussianState random_qem_state(RngStream& rng, int n, bool strict) {
  if (n % 2 == 1) return random_classical_state(rng, n);
  return random_quantum_state(rng, AntisymMatrix::canonical(n), strict ? 0.1 : rng.uniform(0.0, 0.3));
}

std::vector<Check> qem_closed_form(const json& p, RngStream& rng) {
  const int problems = p.value("problems", 30);
  const double tol = p.value("tolerance", 1e-6);
  const double ref_tol = p.value("reference_tolerance", 1e-5);
  Worst dev;
  for (int i = 0; i < problems; ++i) {
    const int n = 1 + i % 4;
    const QemProblem problem(random_qem_state(rng, n, false), random_spd(rng, n, 0.2));
    const QuadratureScheme scheme{n == 4 ? 20 : 40};
    const double closed = qem_closed(problem);
    const double quad = weyl_expectation(FourierSymbol::gaussian(problem.pi), problem.state, scheme);
    dev.update(std::abs(closed - quad), {{"problem", i}, {"dim", n}});
  }
  std::vector<Check> out{worst_check("closed_vs_weyl", dev, tol, {{"problems", problems}})};
  const std::vector<std::pair<std::string, GaussianState>> refs = {
      {"vacuum", GaussianState::vacuum()}, {"thermal1", GaussianState::thermal(1.0)}};
  const std::vector<double> expected = {2.0 / 3.0, 0.4};
  for (std::size_t r = 0; r < refs.size(); ++r) {
    const QemProblem problem(refs[r].second, SymMatrix::identity(2));
    const double closed = qem_closed(problem);
    const double quad = weyl_expectation(FourierSymbol::gaussian(problem.pi), problem.state);
    out.push_back(make_check(refs[r].first + "_closed", closed, expected[r], std::abs(closed - expected[r]),
                             ref_tol));
    out.push_back(make_check(refs[r].first + "_weyl", quad, expected[r], std::abs(quad - expected[r]), ref_tol));
  }
  return out;
}

// QEM asymptotics and lower bound.

std::vector<Check> qem_asymptotics(const json& p, RngStream& rng) {
  const int random_problems = p.value("random_problems", 8);
  const int bound_problems = p.value("bound_problems", 100);
  const double lo = p.value("ratio_min", 0.35);
  const double hi = p.value("ratio_max", 0.65);
  const double spread_max = p.value("max_spread", 2.0);
  const std::vector<double> ts = {0.5, 0.25, 0.125, 0.0625};

  std::vector<std::pair<GaussianState, SymMatrix>> family = {
      {GaussianState::vacuum(), SymMatrix::identity(2)},
      {GaussianState::thermal(1.0), SymMatrix::identity(2)},
  };
  for (int i = 0; i < random_problems; ++i) {
    const int n = 1 + i % 4;
    GaussianState state = random_qem_state(rng, n, false);
    SymMatrix pi = random_spd(rng, n, 0.2);
    // Normalize so that ‖Π‖(‖Σ‖ + ‖μ‖²) = ½: the t = ½ end then sits in the
    // quadratic regime of the expansion.
    const double size = Eigen::SelfAdjointEigenSolver<Matrix>(pi.dense()).eigenvalues().maxCoeff() *
                        (Eigen::SelfAdjointEigenSolver<Matrix>(state.cov().dense()).eigenvalues().maxCoeff() +
                         state.mean().squaredNorm());
    family.emplace_back(std::move(state), pi * (0.5 / size));
  }

  Worst ratio_dev, spread;
  json ratios = json::array();
  for (std::size_t f = 0; f < family.size(); ++f) {
    const std::vector<double> r = qem_asymptotic_residual(family[f].first, family[f].second, ts);
    json row = json::array();
    double min_rt = kInf, max_rt = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      min_rt = std::min(min_rt, r[k] / ts[k]);
      max_rt = std::max(max_rt, r[k] / ts[k]);
    }
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
      const double q = r[k + 1] / r[k];
      row.push_back(q);
      ratio_dev.update(q < lo ? lo - q : (q > hi ? q - hi : 0.0), {{"problem", f}, {"t", ts[k]}, {"ratio", q}});
    }
    spread.update(max_rt / min_rt, {{"problem", f}});
    ratios.push_back(std::move(row));
  }

  double min_gap = kInf;
  json gap_case = nullptr;
  for (int i = 0; i < bound_problems; ++i) {
    const int n = 1 + i % 4;
    const GaussianState state = random_qem_state(rng, n, false);
    const SymMatrix pi = random_spd(rng, n, 0.2) * rng.uniform(0.01, 3.0);
    const double gap = qem_closed(QemProblem(state, pi)) - qem_affine_bound(state, pi);
    if (gap < min_gap) {
      min_gap = gap;
      gap_case = {{"problem", i}, {"dim", n}};
    }
  }

  std::vector<Check> out;
  Check ratio = worst_check("ratio_in_range", ratio_dev, 0.0, {{"range", {lo, hi}}, {"ratios", ratios}});
  out.push_back(std::move(ratio));
  out.push_back(make_check("r_over_t_bounded", spread.value, spread_max,
                           std::max(0.0, spread.value - spread_max), 0.0, {{"worst_case", spread.where}}));
  out.push_back(at_least("lower_bound", min_gap, 0.0, {{"problems", bound_problems}, {"worst_case", gap_case}}));
  return out;
}

// Algebra cross-check.

std::vector<Check> algebra_cross_check(const json& p, RngStream& rng) {
  const int states = p.value("states", 10);
  const int max_degree = p.value("max_degree", 6);
  const int ccr_degree = p.value("ccr_degree", 5);
  long compared = 0, mismatched = 0, swaps = 0, swap_failures = 0;
  json first_failure = nullptr;
  for (int s = 0; s < states; ++s) {
    const int n = 1 + s % 4;
    const AntisymMatrix theta = n == 1 ? AntisymMatrix::zero(1) : random_antisym(rng, n, 0.5);
    const GaussianState state = random_quantum_state(rng, theta, 0.1);
    const ComplexCovariance cov{state.cov(), state.ccr()};
    for (int d = 0; d <= max_degree; ++d) {
      for (const MultiIndex& g : multi_indices_of_degree(n, d)) {
        const bool ok_ordered = ordered_moment_exact(g, state) ==
                                wick_oracle_exact(g, state.mean(), cov, WickOrdering::ordered);
        const bool ok_sym = weyl_symmetrized_moment_exact(g, state) ==
                            wick_oracle_exact(g, state.mean(), cov, WickOrdering::symmetrized);
        compared += 2;
        if (!ok_ordered || !ok_sym) {
          mismatched += !ok_ordered + !ok_sym;
          if (first_failure.is_null()) first_failure = {{"state", s}, {"index", g.entries()}};
        }
      }
    }
    for (int d = 2; d <= ccr_degree; ++d) {
      for (const MultiIndex& g : multi_indices_of_degree(n, d)) {
        std::vector<int> ascending = g.expand();
        std::vector<int> descending(ascending.rbegin(), ascending.rend());
        for (const std::vector<int>& word : {ascending, descending}) {
          const ExactComplex base = word_moment_exact(word, state);
          for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            const int j = word[t], k = word[t + 1];
            if (j == k) continue;
            std::vector<int> swapped = word;
            std::swap(swapped[t], swapped[t + 1]);
            std::vector<int> reduced = word;
            reduced.erase(reduced.begin() + static_cast<long>(t), reduced.begin() + static_cast<long>(t) + 2);
            // X_j X_k − X_k X_j = 2iθ_jk.
            const ExactComplex commutator(0, mpq_class(theta(j, k)) * 2);
            ++swaps;
            if (!(word_moment_exact(swapped, state) == base - commutator * word_moment_exact(reduced, state))) {
              ++swap_failures;
              if (first_failure.is_null()) first_failure = {{"state", s}, {"word", word}, {"position", t}};
            }
          }
        }
        ++compared;
        if (!(word_moment_exact(ascending, state) == ordered_moment_exact(g, state))) ++mismatched;
      }
    }
  }
  const json detail{{"compared", compared}, {"first_failure", first_failure}};
  return {make_check("ordered_equals_wick", static_cast<double>(mismatched), 0.0, static_cast<double>(mismatched),
                     0.0, detail),
          make_check("ccr_swap_rule", static_cast<double>(swap_failures), 0.0, static_cast<double>(swap_failures), 0.0,
                     {{"swaps", swaps}})};
}

// Fock oracle.

std::vector<Check> fock_oracle(const json& p, RngStream&) {
  const double char_tol = p.value("char_tolerance", 1e-6);
  const double moment_tol = p.value("moment_tolerance", 1e-8);
  const int levels = p.value("N", 60);
  const int max_degree = p.value("max_degree", 4);
  const int grid = p.value("grid", 21);
  const double extent = p.value("extent", 3.0);

  auto make = [](double nbar, double s, double phi, Complex alpha) {
    DensityParams d;
    d.nbar = nbar;
    d.s = s;
    d.phi = phi;
    d.alpha = alpha;
    return d;
  };
  const std::vector<std::pair<std::string, DensityParams>> family = {
      {"vacuum", make(0, 0, 0, 0)},
      {"thermal_0.5", make(0.5, 0, 0, 0)},
      {"thermal_1", make(1, 0, 0, 0)},
      {"thermal_2", make(2, 0, 0, 0)},
      {"squeezed_0.5", make(0, 0.5, 0, 0)},
      {"squeezed_-0.5_rot", make(0, -0.5, 0.7, 0)},
      {"squeezed_0.3_rot", make(0, 0.3, 1.9, 0)},
      {"displaced_re", make(0, 0, 0, {1.5, 0})},
      {"displaced_im", make(0, 0, 0, {0, 1.5})},
      {"displaced_mixed", make(0, 0, 0, {-0.9, 1.2})},
  };

  Worst char_dev, moment_dev, ccr;
  double max_tail = 0.0;
  {
    const QuadraturePair qp = build_qp(levels);
    ccr.update(ccr_interior_residual(qp), {{"N", levels}});
  }
  for (const auto& [label, params] : family) {
    DensityParams at_n = params;
    at_n.levels = levels;
    const GaussianDensityMatrix rho = gaussian_density(at_n);
    max_tail = std::max(max_tail, rho.tail_mass);
    const GaussianState state = rho.implied_state();
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        Vector l(2);
        l << -extent + 2 * extent * a / (grid - 1), -extent + 2 * extent * b / (grid - 1);
        char_dev.update(std::abs(oracle_char(rho, l) - quasi_char(state, l)),
                        {{"state", label}, {"lambda", {l(0), l(1)}}});
      }
    }
    DensityParams fine = params;
    fine.levels = std::max(levels, 40 + 10 * max_degree);
    const GaussianDensityMatrix rho_fine = gaussian_density(fine);
    for (int d = 0; d <= max_degree; ++d) {
      for (const MultiIndex& g : multi_indices_of_degree(2, d)) {
        const OracleMoment om = oracle_ordered_moment(rho_fine, g);
        moment_dev.update(std::abs(om.value - ordered_moment(g, state)),
                          {{"state", label}, {"index", g.entries()}, {"N", fine.levels}});
      }
    }
  }
  return {worst_check("char_deviation", char_dev, char_tol,
                      {{"N", levels}, {"grid", grid}, {"extent", extent}, {"max_tail_mass", max_tail}}),
          worst_check("moment_deviation", moment_dev, moment_tol, {{"max_degree", max_degree}}),
          worst_check("ccr_interior", ccr, 1e-10)};
}

// Classical reduction.

std::vector<Check> classical_reduction(const json& p, RngStream& rng) {
  const int states = p.value("states", 10);
  const double tol = p.value("tolerance", 1e-8);
  const double h = p.value("h", 1e-3);
  const int max_degree = p.value("max_degree", 4);
  const QuadratureScheme scheme{p.value("order", 32)};
  Worst expect_dev, mean_dev, cov_dev, moment_dev;
  long exact_mismatch = 0;
  for (int s = 0; s < states; ++s) {
    const int n = 1 + s % 3;
    const GaussianState state = random_classical_state(rng, n);
    const SymMatrix pi = random_spd(rng, n, 0.2);
    const FourierSymbol symbol = FourierSymbol::gaussian(pi);
    const TestFunction f = TestFunction::gaussian_exponential(pi);
    const json where{{"state", s}, {"dim", n}};

    expect_dev.update(std::abs(weyl_expectation(symbol, state, scheme) - expect_quadrature(f, state, scheme).value),
                      where);

    const QuantumPriceResiduals q = quantum_price_residuals(symbol, state, h, scheme);
    mean_dev.update(max_norm(Vector(q.mean - price_mean_residual(f, state, h, scheme))), where);
    // Classical σ_jk differences move both off-diagonal entries, so they are
    // twice the Frechet entry off the diagonal.
    const SymMatrix c = price_cov_residual(f, state, h, scheme);
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) worst = std::max(worst, std::abs((j == k ? 1.0 : 2.0) * q.cov(j, k) - c(j, k)));
    cov_dev.update(worst, where);

    for (int d = 0; d <= max_degree; ++d) {
      for (const MultiIndex& g : multi_indices_of_degree(n, d)) {
        if (!(weyl_symmetrized_moment_exact(g, state) == ordered_moment_exact(g, state))) ++exact_mismatch;
        const Complex m = ordered_moment(g, state);
        const double classical = expect_quadrature(TestFunction::polynomial(n, {{g, 1.0}}), state, scheme).value;
        moment_dev.update(std::abs(m - classical) / std::max(1.0, std::abs(classical)),
                          {{"state", s}, {"index", g.entries()}});
      }
    }
  }
  const json detail{{"states", states}, {"h", h}};
  return {worst_check("weyl_vs_quadrature", expect_dev, tol, detail),
          worst_check("mean_residual_match", mean_dev, tol, detail),
          worst_check("cov_residual_match", cov_dev, tol, detail),
          worst_check("moment_vs_quadrature", moment_dev, tol, detail),
          make_check("symmetrized_equals_ordered", static_cast<double>(exact_mismatch), 0.0,
                     static_cast<double>(exact_mismatch), 0.0)};
}

// Heat kernel.

std::vector<Check> heat_kernel(const json& p, RngStream& rng) {
  const int points = p.value("points", 50);
  const double tol = p.value("tolerance", 1e-6);
  Worst fd, exact;
  for (int i = 0; i < points; ++i) {
    const int n = 1 + i % 3;
    const SymMatrix k = random_spd(rng, n, 0.3);
    const double t = rng.uniform(0.5, 2.0);
    const Vector x = random_vector(rng, n);
    const json where{{"point", i}, {"dim", n}, {"t", t}};
    fd.update(heat_identity_residual(k, t, x, default_step(t)), where);
    exact.update(heat_identity_residual_exact(k, t, x), where);
  }
  return {worst_check("fd_residual", fd, tol, {{"points", points}}),
          worst_check("exact_residual", exact, tol, {{"points", points}})};
}

const std::map<std::string, Criterion>& registry() {
  static const std::map<std::string, Criterion> r = {
      {"classical_price", {30.0, classical_price}},
      {"mgf_closed_form", {10.0, mgf_closed_form}},
      {"quantum_price", {60.0, quantum_price}},
      {"qem_closed_form", {0.0, qem_closed_form}},
      {"qem_asymptotics", {0.0, qem_asymptotics}},
      {"algebra_cross_check", {20.0, algebra_cross_check}},
      {"fock_oracle", {120.0, fock_oracle}},
      {"classical_reduction", {0.0, classical_reduction}},
      {"heat_kernel", {0.0, heat_kernel}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "classical_price", "mgf_closed_form",     "quantum_price", "qem_closed_form",    "qem_asymptotics",
      "algebra_cross_check", "fock_oracle", "classical_reduction", "heat_kernel"};
  return names;
}

SuiteConfig default_suite_config(std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  for (const std::string& name : criterion_names()) c.checks.push_back({name});
  return c;
}

SuiteConfig suite_config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("suite config: expected a JSON object");
  SuiteConfig c;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw InputError("suite config: seed must be a nonnegative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (!j.contains("checks") || !j["checks"].is_array()) throw InputError("suite config: missing 'checks' array");
  for (const json& e : j["checks"]) {
    SuiteEntry entry;
    if (e.is_string()) {
      entry.name = e.get<std::string>();
    } else if (e.is_object() && e.contains("name") && e["name"].is_string()) {
      entry.name = e["name"].get<std::string>();
      if (e.contains("params")) {
        if (!e["params"].is_object()) throw InputError("suite config: params of " + entry.name + " must be an object");
        entry.params = e["params"];
      }
    } else {
      throw InputError("suite config: each check is a name or {\"name\", \"params\"}");
    }
    if (!registry().contains(entry.name)) throw InputError("suite config: unknown check '" + entry.name + "'");
    c.checks.push_back(std::move(entry));
  }
  if (c.checks.empty()) throw InputError("suite config: empty check list (refusing a vacuous pass)");
  return c;
}

bool CriterionOutcome::pass() const {
  return within_time() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CriterionOutcome run_criterion(const SuiteEntry& entry, std::uint64_t seed) {
  const auto it = registry().find(entry.name);
  if (it == registry().end()) throw InputError("unknown check '" + entry.name + "'");
  CriterionOutcome out;
  out.name = entry.name;
  out.time_limit = entry.params.value("time_limit", it->second.time_limit);
  RngStream rng(seed, fnv1a(entry.name));
  const auto start = std::chrono::steady_clock::now();
  try {
    out.checks = it->second.run(entry.params, rng);
  } catch (const std::exception& e) {
    out.checks.push_back(failed_check("error", e.what()));
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (Check& c : out.checks) c.name = entry.name + "/" + c.name;
  return out;
}

Report run_suite(const SuiteConfig& config, bool timing, std::vector<CriterionOutcome>* outcomes) {
  Report report;
  report.command = "suite";
  report.seed = config.seed;
  json entries = json::array();
  for (const SuiteEntry& e : config.checks) entries.push_back({{"name", e.name}, {"params", e.params}});
  report.inputs = {{"seed", config.seed}, {"checks", entries}};
  double total = 0.0;
  for (const SuiteEntry& e : config.checks) {
    CriterionOutcome o = run_criterion(e, config.seed);
    total += o.seconds;
    for (const Check& c : o.checks) report.checks.push_back(c);
    if (timing && o.time_limit > 0.0)
      report.checks.push_back(make_check(e.name + "/runtime", o.seconds, o.time_limit,
                                         std::max(0.0, o.seconds - o.time_limit), 0.0));
    if (outcomes) outcomes->push_back(std::move(o));
  }
  if (timing) report.wall_clock = total;
  return report;
}

}  // namespace weylprice
