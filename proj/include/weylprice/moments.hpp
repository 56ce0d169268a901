#pragma once

#include "weylprice/gaussian.hpp"
#include "weylprice/quadrature.hpp"
#include "weylprice/test_function.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace weylprice {

/// Largest dimension for the classical tensor rule.
inline constexpr int kMaxTensorDim = 4;

enum class MomentMethod { quadrature, monte_carlo };
std::string_view to_string(MomentMethod method);

struct MomentEstimate {
  double value = 0.0;
  MomentMethod method = MomentMethod::quadrature;
  /// Engaged iff method == monte_carlo.
  std::optional<double> std_error;
  std::uint64_t nodes_or_samples = 0;
};

/// E f(X) for classical X ~ N(μ, Σ) via x = μ + Lu, Σ = LLᵀ, and the tensor
/// Gauss–Hermite rule in u.
MomentEstimate expect_quadrature(const TestFunction& f, const GaussianState& state,
                                 const QuadratureScheme& scheme = {});

/// E ∂ₓf(X) and E ∂²ₓf(X) on the same rule.
Vector expect_gradient(const TestFunction& f, const GaussianState& state,
                       const QuadratureScheme& scheme = {});
Matrix expect_hessian(const TestFunction& f, const GaussianState& state,
                      const QuadratureScheme& scheme = {});
/// E ∂^α f(X).
double expect_partial(const TestFunction& f, const GaussianState& state, const MultiIndex& alpha,
                      const QuadratureScheme& scheme = {});

/// Sample mean of f(μ + Lz) over `samples` counter-based normal draws.
MomentEstimate expect_monte_carlo(const TestFunction& f, const GaussianState& state,
                                  std::uint64_t samples, std::uint64_t seed);

/// Default step for σ_jk-differences: 1e−4·max(1, |σ_jk|).
double default_cov_step(const SymMatrix& cov, int j, int k);

/// ∂μ E f(X) by central differences (step h) minus E ∂ₓf(X).
Vector price_mean_residual(const TestFunction& f, const GaussianState& state, double h,
                           const QuadratureScheme& scheme = {});

/// Entry (j,k): ∂_{σjk} E f(X) by central differences under the symmetric
/// perturbation h(eⱼeₖᵀ + eₖeⱼᵀ) (j ≠ k) or h·eⱼeⱼᵀ (j = k), minus
/// E ∂ⱼ∂ₖf (j ≠ k) or ½E ∂ⱼ²f (j = k).
SymMatrix price_cov_residual(const TestFunction& f, const GaussianState& state, double h,
                             const QuadratureScheme& scheme = {});

/// |∂^ℓ_{σjk} g − RHS| with iterated central differences, ℓ ∈ {1, 2};
/// RHS = 2^{−ℓ}E ∂ⱼ^{2ℓ}f for j = k and E ∂ⱼ^ℓ∂ₖ^ℓ f for j ≠ k.
double price_repeated_residual(const TestFunction& f, const GaussianState& state, int j, int k,
                               int ell, double h, const QuadratureScheme& scheme = {});

/// exp(λᵀμ + ½‖λ‖²_Σ).
double mgf(const GaussianState& state, const Vector& lambda);

struct PathSample {
  double t;
  Vector mean;
  SymMatrix cov;
};

/// max over interior samples of |d/dt E f − μ̇ᵀ(β + Rμ) − ½⟨Σ̇, R⟩| for the
/// quadratic f, with central differences of the sampled path.
double dynamic_identity_residual(const QuadraticForm& qf, const std::vector<PathSample>& path);

}  // namespace weylprice
