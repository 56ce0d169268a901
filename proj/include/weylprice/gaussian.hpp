#pragma once

#include "weylprice/linalg.hpp"

#include <string_view>
#include <utility>

namespace weylprice {

inline constexpr double kEigTol = 1e-10;  // classical: min eig Σ > kEigTol
inline constexpr double kPsdTol = 1e-9;   // quantum:   min eig (Σ + iΘ) >= -kPsdTol

/// Mean μ, real covariance Σ and CCR matrix Θ of a classical (Θ = 0) or
/// quantum Gaussian state. Immutable once built.
class GaussianState {
 public:
  GaussianState(Vector mean, SymMatrix cov, AntisymMatrix ccr);
  /// Classical state: Θ = 0.
  GaussianState(Vector mean, SymMatrix cov);

  int dim() const noexcept { return static_cast<int>(mean_.size()); }
  const Vector& mean() const noexcept { return mean_; }
  const SymMatrix& cov() const noexcept { return cov_; }
  const AntisymMatrix& ccr() const noexcept { return ccr_; }

  GaussianState with_mean(Vector mean) const { return {std::move(mean), cov_, ccr_}; }
  GaussianState with_cov(SymMatrix cov) const { return {mean_, std::move(cov), ccr_}; }
  GaussianState with_ccr(AntisymMatrix ccr) const { return {mean_, cov_, std::move(ccr)}; }

  /// One-mode vacuum: μ = 0, Σ = ½I, Θ = ½J.
  static GaussianState vacuum();
  /// One-mode thermal state with mean occupation nbar: Σ = (nbar + ½)I, Θ = ½J.
  static GaussianState thermal(double nbar);
  /// Standard classical state of dimension n: μ = 0, Σ = I, Θ = 0.
  static GaussianState standard(int n);

 private:
  Vector mean_;
  SymMatrix cov_;
  AntisymMatrix ccr_;
};

enum class ValidityMode { classical, quantum, quantum_strict };

std::string_view to_string(ValidityMode mode);
ValidityMode parse_validity_mode(std::string_view name);

struct ValidityVerdict {
  ValidityMode mode;
  /// Smallest eigenvalue of Σ (classical) or of Σ + iΘ (quantum modes).
  double min_eigenvalue;
  double tolerance;
  bool pass;
};

ValidityVerdict validate(const GaussianState& state, ValidityMode mode);

/// Throws AdmissibilityError unless the state passes `mode`.
void require(const GaussianState& state, ValidityMode mode);

/// f(x) = βᵀx + ½xᵀRx.
struct QuadraticForm {
  Vector linear;
  SymMatrix quadratic;

  int dim() const { return static_cast<int>(linear.size()); }
  double operator()(const Vector& x) const;
  /// E f(X) = βᵀμ + ½(μᵀRμ + ⟨R, Σ⟩) for any Gaussian X.
  double expectation(const Vector& mean, const SymMatrix& cov) const;
};

/// Gaussian PDF p_{μ,Σ} with its Cholesky factor cached for repeated use.
class GaussianDensity {
 public:
  explicit GaussianDensity(const GaussianState& state);

  double operator()(const Vector& x) const;
  double log_value(const Vector& x) const;
  /// Σ⁻¹(x − μ) = ∂μ ln p.
  Vector log_grad_mean(const Vector& x) const;
  /// ½(Σ⁻¹(x−μ)(x−μ)ᵀΣ⁻¹ − Σ⁻¹) = ∂Σ ln p.
  SymMatrix log_frechet_cov(const Vector& x) const;

 private:
  Vector mean_;
  Eigen::LLT<Matrix> llt_;
  double log_norm_;
};

double pdf(const GaussianState& state, const Vector& x);
Vector log_grad_mean(const GaussianState& state, const Vector& x);
SymMatrix log_frechet_cov(const GaussianState& state, const Vector& x);

/// (∂Σ ln det Σ, ∂Σ ‖v‖²_{Σ⁻¹}) = (Σ⁻¹, −Σ⁻¹vvᵀΣ⁻¹).
std::pair<SymMatrix, SymMatrix> frechet_identities(const SymMatrix& cov, const Vector& v);

/// Central-difference step (ε^{1/3})·max(1, scale).
double default_step(double scale = 1.0);

/// |∂t p_{0,Kt}(x) − ½⟨K, ∂²ₓ p_{0,Kt}(x)⟩| with a central difference in t
/// and the analytic Hessian 2·p·∂Σ ln p.
double heat_identity_residual(const SymMatrix& conductivity, double t, const Vector& x, double h);

/// Same residual with the closed-form time derivative
/// ∂t ln p_{0,Kt}(x) = −n/(2t) + xᵀK⁻¹x/(2t²) substituted for the difference.
double heat_identity_residual_exact(const SymMatrix& conductivity, double t, const Vector& x);

}  // namespace weylprice
