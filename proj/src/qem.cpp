#include "weylprice/qem.hpp"

#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weylprice {

QemProblem::QemProblem(GaussianState s, SymMatrix p) : state(std::move(s)), pi(std::move(p)) {
  if (pi.order() != state.dim()) throw DimensionError("Π and state dimensions differ");
  const double e = min_eigenvalue(pi);
  if (e <= kEigTol) throw AdmissibilityError("Π must be positive definite", e);
  require(state, ValidityMode::quantum);
}

namespace {

Eigen::PartialPivLU<Matrix> factor_shifted(const SymMatrix& cov, const SymMatrix& pi) {
  if (cov.order() != pi.order()) throw DimensionError("Σ and Π orders differ");
  const int n = cov.order();
  const Matrix m = Matrix::Identity(n, n) + cov.dense() * pi.dense();
  Eigen::PartialPivLU<Matrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 1.0 / kMaxCondition))
    throw NumericalError("I + ΣΠ is ill-conditioned (reciprocal condition " + std::to_string(rcond) + ")");
  return lu;
}

double closed_form(const Vector& mean, const SymMatrix& cov, const SymMatrix& pi) {
  const auto lu = factor_shifted(cov, pi);
  const SymMatrix p = psi(cov, pi);
  const double det = lu.determinant();
  if (!(det > 0.0)) throw NumericalError("det(I + ΣΠ) is not positive");
  return std::exp(-0.5 * mean.dot(p.dense() * mean)) / std::sqrt(det);
}

}  // namespace

SymMatrix psi(const SymMatrix& cov, const SymMatrix& pi) {
  const auto lu = factor_shifted(cov, pi);
  return SymMatrix::symmetric_part(pi.dense() * lu.inverse());
}

double qem_closed(const QemProblem& problem) {
  return closed_form(problem.state.mean(), problem.state.cov(), problem.pi);
}

double qem_affine_bound(const GaussianState& state, const SymMatrix& pi) {
  const Vector& mu = state.mean();
  return 1.0 - 0.5 * (mu.dot(pi.dense() * mu) + state.cov().inner(pi));
}

std::vector<double> qem_asymptotic_residual(const GaussianState& state, const SymMatrix& pi,
                                            const std::vector<double>& shrink) {
  std::vector<double> out;
  out.reserve(shrink.size());
  for (double t : shrink) {
    if (!(t > 0.0)) throw DomainError("shrink factor must be positive (r(t) is undefined at t = 0)");
    const SymMatrix scaled = pi * t;
    const double g = qem_closed(QemProblem(state, scaled));
    out.push_back(std::abs(g - qem_affine_bound(state, scaled)) / t);
  }
  return out;
}

double QemVerification::max_deviation() const {
  return std::max({dev_analytic_hessian, dev_analytic_frechet, dev_hessian_frechet});
}

QemVerification qem_price_verify(const QemProblem& problem, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const GaussianState& state = problem.state;
  require(state, ValidityMode::quantum_strict);

  QemVerification v;
  v.h = h;
  v.value = qem_closed(problem);
  const SymMatrix p = psi(state.cov(), problem.pi);
  const Vector pm = p.dense() * state.mean();
  v.analytic = (SymMatrix::outer(pm) - p) * v.value;

  v.mean_hessian = fd_hessian(
      [&](const Vector& mu) { return closed_form(mu, state.cov(), problem.pi); }, state.mean(), h);
  v.twice_frechet = fd_frechet(
                        [&](const SymMatrix& cov) {
                          const GaussianState moved = state.with_cov(cov);
                          const ValidityVerdict verdict = validate(moved, ValidityMode::quantum_strict);
                          if (!verdict.pass)
                            throw AdmissibilityError("perturbed Σ breaks S ≻ 0", verdict.min_eigenvalue);
                          return closed_form(state.mean(), cov, problem.pi);
                        },
                        state.cov(), h) *
                    2.0;
  v.dev_analytic_hessian = max_norm(v.analytic - v.mean_hessian);
  v.dev_analytic_frechet = max_norm(v.analytic - v.twice_frechet);
  v.dev_hessian_frechet = max_norm(v.mean_hessian - v.twice_frechet);
  return v;
}

}  // namespace weylprice
