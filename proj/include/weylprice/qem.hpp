#pragma once

#include "weylprice/gaussian.hpp"

#include <vector>

namespace weylprice {

/// E exp(−½XᵀΠX) for X in a Gaussian (quantum) state, Π ≻ 0.
struct QemProblem {
  GaussianState state;
  SymMatrix pi;

  QemProblem(GaussianState s, SymMatrix p);
};

/// Condition-number ceiling for I + ΣΠ.
inline constexpr double kMaxCondition = 1e12;

/// Ψ = (Π⁻¹ + Σ)⁻¹, evaluated as Π(I + ΣΠ)⁻¹ and symmetrized.
SymMatrix psi(const SymMatrix& cov, const SymMatrix& pi);

/// exp(−½‖μ‖²_Ψ) / √det(I + ΣΠ).
double qem_closed(const QemProblem& problem);

/// 1 − ½(‖μ‖²_Π + ⟨Σ, Π⟩): the affine part of the small-Π expansion and a lower
/// bound for the moment.
double qem_affine_bound(const GaussianState& state, const SymMatrix& pi);

/// r(t) = |qem_closed(μ, Σ, tΠ) − affine bound at tΠ| / t for each t > 0.
std::vector<double> qem_asymptotic_residual(const GaussianState& state, const SymMatrix& pi,
                                            const std::vector<double>& shrink);

struct QemVerification {
  double value;
  SymMatrix analytic;       // g(ΨμμᵀΨ − Ψ)
  SymMatrix mean_hessian;   // central-difference ∂²μ g
  SymMatrix twice_frechet;  // 2 × central-difference ∂Σ g
  double dev_analytic_hessian;
  double dev_analytic_frechet;
  double dev_hessian_frechet;
  double h;

  double max_deviation() const;
};

/// Checks ∂²μ g = g(ΨμμᵀΨ − Ψ) = 2∂Σ g on the closed form.
QemVerification qem_price_verify(const QemProblem& problem, double h);

}  // namespace weylprice
