#pragma once

#include "weylprice/gaussian.hpp"
#include "weylprice/multi_index.hpp"
#include "weylprice/quadrature.hpp"
#include "weylprice/weyl.hpp"

namespace weylprice {

/// Operator on the lowest N oscillator levels |0⟩ … |N−1⟩.
struct TruncatedOperator {
  CMatrix matrix;
  int levels() const { return static_cast<int>(matrix.rows()); }
};

struct QuadraturePair {
  TruncatedOperator q;
  TruncatedOperator p;
};

/// a[k−1, k] = √k; q = (a + a†)/√2, p = (a − a†)/(i√2). Requires N ≥ 4.
QuadraturePair build_qp(int levels);

/// ‖[q, p] − iI‖ on the top-left (N−2)×(N−2) block, where truncation does not reach.
double ccr_interior_residual(const QuadraturePair& qp);

/// Parameters of ρ = D(α)R(φ)S(s)·ρ_thermal(n̄)·S(s)†R(φ)†D(α)†.
struct DensityParams {
  double nbar = 0.0;
  double s = 0.0;
  double phi = 0.0;
  Complex alpha{};
  int levels = 60;
};

/// Default ceiling on the population of the top ten retained levels.
inline constexpr double kDefaultTailTol = 1e-8;

struct GaussianDensityMatrix {
  DensityParams params;
  CMatrix rho;
  /// Σ_{k ≥ N−10} ρ_kk.
  double tail_mass = 0.0;

  int levels() const { return static_cast<int>(rho.rows()); }
  /// μ = √2(Re α, Im α), Σ = (n̄+½)R(φ)diag(e^{2s}, e^{−2s})R(φ)ᵀ, Θ = ½J.
  GaussianState implied_state() const;
};

GaussianState implied_state(const DensityParams& params);

/// Builds the truncated density matrix; throws DomainError when the tail
/// population exceeds `tail_tol` (the remedy is a larger N).
GaussianDensityMatrix gaussian_density(const DensityParams& params, double tail_tol = kDefaultTailTol);

/// Tr(ρ exp(i(λ₁q + λ₂p))) with the exponential from a Hermitian eigendecomposition.
Complex oracle_char(const GaussianDensityMatrix& rho, const Vector& lambda);

struct OracleMoment {
  Complex value;
  /// |value(N + 10) − value(N)|.
  double refinement_shift;
  bool truncation_warning;
};

/// Tr(ρ q^{γ₁} p^{γ₂}); requires |γ| ≤ 6 and N ≥ 40 + 10|γ|.
OracleMoment oracle_ordered_moment(const GaussianDensityMatrix& rho, const MultiIndex& gamma);

/// ∫ F(λ) Tr(ρ e^{iλᵀX}) dλ for a Gaussian symbol, λ = L_Π u on the tensor rule.
double oracle_weyl_expectation(const GaussianDensityMatrix& rho, const FourierSymbol& symbol,
                               const QuadratureScheme& scheme = {30});

}  // namespace weylprice
