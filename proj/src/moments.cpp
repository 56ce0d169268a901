#include "weylprice/moments.hpp"

#include "weylprice/error.hpp"
#include "weylprice/rng.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace weylprice {

std::string_view to_string(MomentMethod method) {
  return method == MomentMethod::quadrature ? "quadrature" : "monte_carlo";
}

namespace {

struct Whitening {
  Vector mean;
  Matrix factor;  // Σ = LLᵀ
};

Whitening whiten(const TestFunction& f, const GaussianState& state) {
  if (f.dim() != state.dim()) throw DimensionError("test function and state dimensions differ");
  require(state, ValidityMode::classical);
  const auto llt = checked_cholesky(state.cov(), "Σ");
  return {state.mean(), llt.matrixL()};
}

void check_tensor_dim(int n) {
  if (n > kMaxTensorDim)
    throw DimensionError("tensor quadrature supports n <= 4, got " + std::to_string(n));
}

// Quadrature change of variables x = mean + factor·u. For f = exp(−½xᵀΠx) the
// Gaussian factor is folded into the weight: p_{μ,Σ}(x)f(x) = scale·p_{m,C}(x)
// with C = (Σ⁻¹ + Π)⁻¹ and m = CΣ⁻¹μ, and integrands are divided by f. The
// plain rule converges slowly once ΣΠ is large.
struct QuadratureRule {
  Vector mean;
  Matrix factor;
  double scale = 1.0;
  std::optional<Matrix> tilt;  // Π
};

QuadratureRule quadrature_rule(const TestFunction& f, const GaussianState& state) {
  const Whitening w = whiten(f, state);
  const auto* ge = std::get_if<TestFunction::GaussianExponential>(&f.data());
  if (!ge) return {w.mean, w.factor, 1.0, std::nullopt};
  const int n = state.dim();
  const Eigen::LLT<Matrix> sigma_llt(state.cov().dense());
  const Matrix sigma_inv = sigma_llt.solve(Matrix::Identity(n, n));
  const Eigen::LLT<Matrix> prec_llt(0.5 * (sigma_inv + sigma_inv.transpose()) + ge->pi.dense());
  if (prec_llt.info() != Eigen::Success) throw NumericalError("Σ⁻¹ + Π is not positive definite");
  const Vector b = sigma_inv * state.mean();
  const Vector m = prec_llt.solve(b);
  const Matrix factor = prec_llt.matrixU().solve(Matrix::Identity(n, n));  // C = factor·factorᵀ
  const double log_scale = -0.5 * (log_det(sigma_llt) + log_det(prec_llt)) -
                           0.5 * (state.mean().dot(b) - m.dot(b));
  return {m, factor, std::exp(log_scale), ge->pi.dense()};
}

template <class T, class G>
T whitened_expectation(const TestFunction& f, const GaussianState& state,
                       const QuadratureScheme& scheme, const G& g) {
  check_tensor_dim(state.dim());
  const QuadratureRule r = quadrature_rule(f, state);
  T out = tensor_expectation<T>(scheme, state.dim(), [&](const Vector& u) -> T {
    const Vector x = r.mean + r.factor * u;
    if (!r.tilt) return g(x);
    return g(x) * std::exp(0.5 * x.dot(*r.tilt * x));
  });
  return out * r.scale;
}

double finite_or_throw(double v, const Vector& x) {
  if (!std::isfinite(v)) {
    std::string where;
    for (int k = 0; k < x.size(); ++k) where += (k ? "," : "") + std::to_string(x(k));
    throw NumericalError("test function is not finite at node (" + where + ")");
  }
  return v;
}

// Classical admissibility of a perturbed covariance, with the eigenvalue in the error.
GaussianState perturbed(const GaussianState& state, const SymMatrix& cov) {
  GaussianState out = state.with_cov(cov);
  const ValidityVerdict v = validate(out, ValidityMode::classical);
  if (!v.pass)
    throw AdmissibilityError("perturbed covariance is not positive definite (min eigenvalue " +
                                 format_number(v.min_eigenvalue) + ")",
                             v.min_eigenvalue);
  return out;
}

SymMatrix direction(int n, int j, int k) {
  SymMatrix d(n);
  d.set(j, k, 1.0);  // symmetric storage: eⱼeₖᵀ + eₖeⱼᵀ off the diagonal, eⱼeⱼᵀ on it
  return d;
}

double moment(const TestFunction& f, const GaussianState& s, const QuadratureScheme& scheme) {
  return expect_quadrature(f, s, scheme).value;
}

}  // namespace

MomentEstimate expect_quadrature(const TestFunction& f, const GaussianState& state,
                                 const QuadratureScheme& scheme) {
  MomentEstimate est;
  est.value = whitened_expectation<double>(f, state, scheme,
                                           [&](const Vector& x) { return finite_or_throw(f(x), x); });
  est.method = MomentMethod::quadrature;
  est.nodes_or_samples = scheme.node_count(state.dim());
  return est;
}

Vector expect_gradient(const TestFunction& f, const GaussianState& state, const QuadratureScheme& scheme) {
  return whitened_expectation<Vector>(f, state, scheme, [&](const Vector& x) { return f.gradient(x); });
}

Matrix expect_hessian(const TestFunction& f, const GaussianState& state, const QuadratureScheme& scheme) {
  return whitened_expectation<Matrix>(f, state, scheme, [&](const Vector& x) { return f.hessian(x); });
}

double expect_partial(const TestFunction& f, const GaussianState& state, const MultiIndex& alpha,
                      const QuadratureScheme& scheme) {
  return whitened_expectation<double>(f, state, scheme,
                                      [&](const Vector& x) { return f.partial(x, alpha); });
}

MomentEstimate expect_monte_carlo(const TestFunction& f, const GaussianState& state,
                                  std::uint64_t samples, std::uint64_t seed) {
  if (samples < 2) throw DomainError("Monte Carlo needs at least 2 samples");
  const Whitening w = whiten(f, state);
  const int n = state.dim();
  const CounterRng rng(seed);
  std::vector<double> values(samples);
  Vector z(n);
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (int d = 0; d < n; ++d) z(d) = rng.normal(i * static_cast<std::uint64_t>(n) + d);
    const Vector x = w.mean + w.factor * z;
    values[i] = finite_or_throw(f(x), x);
  }
  const double mean =
      detail::pairwise_sum<double>(0, samples, [&](std::uint64_t i) { return values[i]; }) /
      static_cast<double>(samples);
  const double ss = detail::pairwise_sum<double>(0, samples, [&](std::uint64_t i) {
    const double d = values[i] - mean;
    return d * d;
  });
  const double sample_var = ss / static_cast<double>(samples - 1);
  MomentEstimate est;
  est.value = mean;
  est.method = MomentMethod::monte_carlo;
  est.std_error = std::sqrt(sample_var / static_cast<double>(samples));
  est.nodes_or_samples = samples;
  return est;
}

double default_cov_step(const SymMatrix& cov, int j, int k) {
  return 1e-4 * std::max(1.0, std::abs(cov(j, k)));
}

Vector price_mean_residual(const TestFunction& f, const GaussianState& state, double h,
                           const QuadratureScheme& scheme) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const int n = state.dim();
  Vector lhs(n);
  for (int j = 0; j < n; ++j) {
    Vector up = state.mean(), down = state.mean();
    up(j) += h;
    down(j) -= h;
    lhs(j) = (moment(f, state.with_mean(up), scheme) - moment(f, state.with_mean(down), scheme)) / (2.0 * h);
  }
  return lhs - expect_gradient(f, state, scheme);
}

SymMatrix price_cov_residual(const TestFunction& f, const GaussianState& state, double h,
                             const QuadratureScheme& scheme) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const int n = state.dim();
  const Matrix hess = expect_hessian(f, state, scheme);
  SymMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      const SymMatrix d = direction(n, j, k) * h;
      const double up = moment(f, perturbed(state, state.cov() + d), scheme);
      const double down = moment(f, perturbed(state, state.cov() - d), scheme);
      const double lhs = (up - down) / (2.0 * h);
      const double rhs = j == k ? 0.5 * hess(j, j) : hess(j, k);
      out.set(j, k, lhs - rhs);
    }
  return out;
}

double price_repeated_residual(const TestFunction& f, const GaussianState& state, int j, int k,
                               int ell, double h, const QuadratureScheme& scheme) {
  const int n = state.dim();
  if (ell != 1 && ell != 2) throw DomainError("repeated Price identity implemented for ell in {1, 2}");
  if (j < 0 || k < 0 || j >= n || k >= n) throw DimensionError("index out of range");
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const SymMatrix d = direction(n, j, k) * h;
  double lhs = 0.0;
  if (ell == 1) {
    lhs = (moment(f, perturbed(state, state.cov() + d), scheme) -
           moment(f, perturbed(state, state.cov() - d), scheme)) /
          (2.0 * h);
  } else {
    lhs = (moment(f, perturbed(state, state.cov() + d), scheme) - 2.0 * moment(f, state, scheme) +
           moment(f, perturbed(state, state.cov() - d), scheme)) /
          (h * h);
  }
  MultiIndex alpha(n);
  double scale = 1.0;
  if (j == k) {
    alpha[j] = 2 * ell;
    scale = std::ldexp(1.0, -ell);
  } else {
    alpha[j] = ell;
    alpha[k] = ell;
  }
  return std::abs(lhs - scale * expect_partial(f, state, alpha, scheme));
}

double mgf(const GaussianState& state, const Vector& lambda) {
  if (lambda.size() != state.dim()) throw DimensionError("mgf: λ has wrong length");
  require(state, ValidityMode::classical);
  return std::exp(lambda.dot(state.mean()) + 0.5 * lambda.dot(state.cov().dense() * lambda));
}

double dynamic_identity_residual(const QuadraticForm& qf, const std::vector<PathSample>& path) {
  if (path.size() < 3) throw DomainError("dynamic identity needs at least 3 path samples");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i].mean.size() != qf.dim() || path[i].cov.order() != qf.dim())
      throw DimensionError("path sample dimension differs from the quadratic form");
    if (i > 0 && !(path[i].t > path[i - 1].t)) throw DomainError("path times must be strictly increasing");
    if (min_eigenvalue(path[i].cov) <= kEigTol)
      throw AdmissibilityError("path covariance is not positive definite", min_eigenvalue(path[i].cov));
  }
  const Matrix r = qf.quadratic.dense();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const auto& prev = path[i - 1];
    const auto& cur = path[i];
    const auto& next = path[i + 1];
    const double dt = next.t - prev.t;
    const double dmoment =
        (qf.expectation(next.mean, next.cov) - qf.expectation(prev.mean, prev.cov)) / dt;
    const Vector dmean = (next.mean - prev.mean) / dt;
    const SymMatrix dcov = (next.cov - prev.cov) * (1.0 / dt);
    const double rhs = dmean.dot(qf.linear + r * cur.mean) + 0.5 * dcov.inner(qf.quadratic);
    worst = std::max(worst, std::abs(dmoment - rhs));
  }
  return worst;
}

}  // namespace weylprice
