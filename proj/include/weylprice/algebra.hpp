#pragma once

#include "weylprice/exact.hpp"
#include "weylprice/gaussian.hpp"
#include "weylprice/linalg.hpp"
#include "weylprice/multi_index.hpp"

#include <map>
#include <string_view>

namespace weylprice {

/// Degree cap for symbolic moment computations.
inline constexpr int kDegreeCap = 8;

/// Θ̃: θ̃ⱼₖ = θ̃ₖⱼ = θⱼₖ for j < k, zero diagonal. With it the Weyl operator
/// factorizes as e^{iλᵀX} = e^{(i/2)λᵀΘ̃λ} ∏ₖ e^{iλₖXₖ} (ascending k).
SymMatrix theta_tilde(const AntisymMatrix& theta);

/// Quantum covariance S = Σ + iΘ.
struct ComplexCovariance {
  SymMatrix sigma;
  AntisymMatrix theta;

  int order() const { return sigma.order(); }
  CMatrix hermitian() const;
  /// Entry s_jk = σⱼₖ + iθⱼₖ.
  Complex operator()(int j, int k) const { return {sigma(j, k), theta(j, k)}; }
};

/// Sum of ordered monomials X^γ (ascending variable index) with complex
/// coefficients; the normal form for CCR-algebra results.
class WeylPolynomial {
 public:
  WeylPolynomial() = default;
  explicit WeylPolynomial(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::map<MultiIndex, Complex>& terms() const { return terms_; }
  Complex coeff(const MultiIndex& gamma) const;
  void add(const MultiIndex& gamma, Complex c);
  /// Drops coefficients with |c| <= tol.
  WeylPolynomial pruned(double tol = 0.0) const;

  /// E f(X) = Σ c_γ E X^γ for a Gaussian state.
  Complex expectation(const GaussianState& state) const;

 private:
  int dim_ = 0;
  std::map<MultiIndex, Complex> terms_;
};

/// (−i)^{|α|} ∂^α χ(0) for χ(λ) = e^{iλᵀμ − ½λᵀΣλ}: the Weyl-symmetrized
/// moment, computed by exact Taylor-coefficient extraction.
Complex weyl_symmetrized_moment(const MultiIndex& alpha, const GaussianState& state);
ExactComplex weyl_symmetrized_moment_exact(const MultiIndex& alpha, const GaussianState& state);

/// E X^γ = (−i)^{|γ|} ∂^γ [e^{−(i/2)λᵀΘ̃λ} χ(λ)] at λ = 0.
Complex ordered_moment(const MultiIndex& gamma, const GaussianState& state);
ExactComplex ordered_moment_exact(const MultiIndex& gamma, const GaussianState& state);

/// ∂^α e^{iλᵀX} at λ = 0 expanded into ordered monomials.
WeylPolynomial weyl_derivative_at_zero(const MultiIndex& alpha, const AntisymMatrix& theta);

/// Weyl quantization of the distributional symbol F = Σ_α c_α ∂^α δ.
WeylPolynomial quantize_delta_symbol(const std::map<MultiIndex, Complex>& symbol,
                                     const AntisymMatrix& theta);

/// Weyl quantization of βᵀx + ½xᵀRx under the CCR matrix Θ.
WeylPolynomial quantize_quadratic(const QuadraticForm& qf, const AntisymMatrix& theta);

enum class WickOrdering { symmetrized, ordered };
std::string_view to_string(WickOrdering ordering);
WickOrdering parse_wick_ordering(std::string_view name);

/// Brute-force pair-partition evaluation: each factor of the ascending product
/// X^α is either a singleton (contributing μ) or paired with a later factor
/// (contributing s_jk in ordered mode, σⱼₖ in symmetrized mode).
Complex wick_oracle(const MultiIndex& alpha, const Vector& mean, const ComplexCovariance& cov,
                    WickOrdering ordering);
ExactComplex wick_oracle_exact(const MultiIndex& alpha, const Vector& mean,
                               const ComplexCovariance& cov, WickOrdering ordering);

/// E X_{w₀} X_{w₁} ⋯ for an arbitrary word (any variable order). Each position
/// becomes its own variable with inherited Σ and Θ entries, and the Taylor
/// route of ordered_moment is applied to the all-ones index.
ExactComplex word_moment_exact(const std::vector<int>& word, const GaussianState& state);

}  // namespace weylprice
