#include "weylprice/gaussian.hpp"

#include "weylprice/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace weylprice {

GaussianState::GaussianState(Vector mean, SymMatrix cov, AntisymMatrix ccr)
    : mean_(std::move(mean)), cov_(std::move(cov)), ccr_(std::move(ccr)) {
  const int n = static_cast<int>(mean_.size());
  if (n < 1) throw DimensionError("Gaussian state needs dim >= 1");
  if (n > kMaxDim) throw DimensionError("dimension " + std::to_string(n) + " exceeds cap of 8");
  if (cov_.order() != n || ccr_.order() != n) {
    throw DimensionError("mean has length " + std::to_string(n) + " but cov/ccr have order " +
                         std::to_string(cov_.order()) + "/" + std::to_string(ccr_.order()));
  }
}

GaussianState::GaussianState(Vector mean, SymMatrix cov)
    : GaussianState(mean, cov, AntisymMatrix::zero(static_cast<int>(mean.size()))) {}

GaussianState GaussianState::vacuum() { return thermal(0.0); }

GaussianState GaussianState::thermal(double nbar) {
  if (nbar < 0.0) throw DomainError("thermal occupation must be nonnegative");
  return {Vector::Zero(2), SymMatrix::identity(2) * (nbar + 0.5), AntisymMatrix::canonical(2)};
}

GaussianState GaussianState::standard(int n) {
  return {Vector::Zero(n), SymMatrix::identity(n)};
}

std::string_view to_string(ValidityMode mode) {
  switch (mode) {
    case ValidityMode::classical: return "classical";
    case ValidityMode::quantum: return "quantum";
    case ValidityMode::quantum_strict: return "quantum_strict";
  }
  return "?";
}

ValidityMode parse_validity_mode(std::string_view name) {
  if (name == "classical") return ValidityMode::classical;
  if (name == "quantum") return ValidityMode::quantum;
  if (name == "quantum_strict") return ValidityMode::quantum_strict;
  throw InputError("unknown validity mode '" + std::string(name) + "'");
}

ValidityVerdict validate(const GaussianState& state, ValidityMode mode) {
  switch (mode) {
    case ValidityMode::classical: {
      const double e = min_eigenvalue(state.cov());
      return {mode, e, kEigTol, e > kEigTol};
    }
    case ValidityMode::quantum: {
      const double e = min_eigenvalue_hermitian(state.cov(), state.ccr());
      return {mode, e, kPsdTol, e >= -kPsdTol};
    }
    case ValidityMode::quantum_strict: {
      // S ≻ 0 is judged with the same margin as classical positivity.
      const double e = min_eigenvalue_hermitian(state.cov(), state.ccr());
      return {mode, e, kEigTol, e > kEigTol};
    }
  }
  throw DomainError("unknown validity mode");
}

void require(const GaussianState& state, ValidityMode mode) {
  const ValidityVerdict v = validate(state, mode);
  if (!v.pass) {
    throw AdmissibilityError("state fails " + std::string(to_string(mode)) +
                                 " admissibility: min eigenvalue " + format_number(v.min_eigenvalue),
                             v.min_eigenvalue);
  }
}

double QuadraticForm::operator()(const Vector& x) const {
  return linear.dot(x) + 0.5 * x.dot(quadratic.dense() * x);
}

double QuadraticForm::expectation(const Vector& mean, const SymMatrix& cov) const {
  return linear.dot(mean) + 0.5 * (mean.dot(quadratic.dense() * mean) + quadratic.inner(cov));
}

GaussianDensity::GaussianDensity(const GaussianState& state)
    : mean_(state.mean()), llt_((require(state, ValidityMode::classical), state.cov().dense())) {
  if (llt_.info() != Eigen::Success) {
    throw AdmissibilityError("covariance is not positive definite", min_eigenvalue(state.cov()));
  }
  const double n = static_cast<double>(state.dim());
  log_norm_ = -0.5 * n * std::log(2.0 * std::numbers::pi) - 0.5 * log_det(llt_);
}

double GaussianDensity::log_value(const Vector& x) const {
  if (x.size() != mean_.size()) throw DimensionError("pdf: point has wrong length");
  return log_norm_ - 0.5 * inverse_quadratic(llt_, x - mean_);
}

double GaussianDensity::operator()(const Vector& x) const { return std::exp(log_value(x)); }

Vector GaussianDensity::log_grad_mean(const Vector& x) const {
  if (x.size() != mean_.size()) throw DimensionError("log_grad_mean: point has wrong length");
  return llt_.solve(x - mean_);
}

SymMatrix GaussianDensity::log_frechet_cov(const Vector& x) const {
  const Vector w = log_grad_mean(x);
  const Matrix inv = llt_.solve(Matrix::Identity(mean_.size(), mean_.size()));
  return SymMatrix::symmetric_part(0.5 * (w * w.transpose() - inv));
}

double pdf(const GaussianState& state, const Vector& x) { return GaussianDensity(state)(x); }

Vector log_grad_mean(const GaussianState& state, const Vector& x) {
  return GaussianDensity(state).log_grad_mean(x);
}

SymMatrix log_frechet_cov(const GaussianState& state, const Vector& x) {
  return GaussianDensity(state).log_frechet_cov(x);
}

std::pair<SymMatrix, SymMatrix> frechet_identities(const SymMatrix& cov, const Vector& v) {
  if (v.size() != cov.order()) throw DimensionError("frechet_identities: vector length mismatch");
  if (min_eigenvalue(cov) <= kEigTol)
    throw AdmissibilityError("Σ is not positive definite", min_eigenvalue(cov));
  const auto llt = checked_cholesky(cov, "Σ");
  const Matrix inv = llt.solve(Matrix::Identity(cov.order(), cov.order()));
  const Vector w = llt.solve(v);
  return {SymMatrix::symmetric_part(inv), SymMatrix::outer(w) * -1.0};
}

double default_step(double scale) {
  return std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(scale));
}

namespace {

GaussianState heat_state(const SymMatrix& conductivity, double t) {
  if (!(t > 0.0)) throw DomainError("heat identity needs t > 0");
  return {Vector::Zero(conductivity.order()), conductivity * t};
}

// ½⟨K, ∂²ₓp⟩ with ∂²ₓp = 2 p ∂Σ ln p.
double heat_rhs(const SymMatrix& conductivity, double t, const Vector& x) {
  const GaussianDensity density(heat_state(conductivity, t));
  return density(x) * conductivity.inner(density.log_frechet_cov(x));
}

}  // namespace

double heat_identity_residual(const SymMatrix& conductivity, double t, const Vector& x, double h) {
  if (!(h > 0.0) || !(t - h > 0.0))
    throw DomainError("heat identity: t - h must stay positive (t=" + std::to_string(t) +
                      ", h=" + std::to_string(h) + ")");
  const double forward = pdf(heat_state(conductivity, t + h), x);
  const double backward = pdf(heat_state(conductivity, t - h), x);
  const double dt = (forward - backward) / (2.0 * h);
  return std::abs(dt - heat_rhs(conductivity, t, x));
}

double heat_identity_residual_exact(const SymMatrix& conductivity, double t, const Vector& x) {
  const GaussianState state = heat_state(conductivity, t);
  const GaussianDensity density(state);
  const auto llt = checked_cholesky(conductivity, "K");
  const double n = static_cast<double>(x.size());
  const double dlog = -n / (2.0 * t) + inverse_quadratic(llt, x) / (2.0 * t * t);
  return std::abs(density(x) * dlog - heat_rhs(conductivity, t, x));
}

}  // namespace weylprice
