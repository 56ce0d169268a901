#pragma once

#include "weylprice/gaussian.hpp"
#include "weylprice/quadrature.hpp"

#include <functional>
#include <string_view>
#include <variant>

namespace weylprice {

/// Fourier transform F(λ) = (2π)^{−n}∫ f(x) e^{−iλᵀx} dx of a real function f,
/// in one of the supported families.
class FourierSymbol {
 public:
  /// F = p_{0,Π}, the transform of f(x) = exp(−½xᵀΠx).
  struct Gaussian {
    SymMatrix pi;
  };
  enum class Phase { cos, sin };
  /// f(x) = cos(x₀ᵀx) or sin(x₀ᵀx): F is a pair of point masses at ±x₀.
  struct PlaneWave {
    Vector x0;
    Phase phase = Phase::cos;
  };
  /// Black-box F. `weighted_integrable` declares ∫|F|(1+|λ|²)dλ < ∞.
  struct Grid {
    int dim;
    std::function<Complex(const Vector&)> fn;
    bool weighted_integrable = true;
  };

  enum class Kind { gaussian, plane_wave, grid };

  static FourierSymbol gaussian(SymMatrix pi);
  static FourierSymbol plane_wave(Vector x0, Phase phase = Phase::cos);
  static FourierSymbol grid(int dim, std::function<Complex(const Vector&)> fn,
                            bool weighted_integrable = true);

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  std::string_view kind_name() const;
  int dim() const;
  /// The integrability flag required by the quantum Price identities. Built-in
  /// kinds always satisfy it; grid symbols carry their declared value.
  bool weighted_integrable() const;
  /// F(λ); throws DomainError for plane waves (point masses have no density).
  Complex operator()(const Vector& lambda) const;

  const auto& data() const { return data_; }

 private:
  using Data = std::variant<Gaussian, PlaneWave, Grid>;
  explicit FourierSymbol(Data d) : data_(std::move(d)) {}
  Data data_;
};

/// Imaginary residue allowed before an expectation is declared non-real.
inline constexpr double kImagTol = 1e-9;

/// χ(λ) = E e^{iλᵀX} = exp(iλᵀμ − ½λᵀΣλ). Θ enters only through admissibility.
Complex quasi_char(const GaussianState& state, const Vector& lambda);

/// E f(X) = ∫ F(λ) χ(λ) dλ.
double weyl_expectation(const FourierSymbol& symbol, const GaussianState& state,
                        const QuadratureScheme& scheme = {});
/// E ∂ₓf(X) = ∫ iλ F(λ) χ(λ) dλ.
Vector weyl_grad_expectation(const FourierSymbol& symbol, const GaussianState& state,
                             const QuadratureScheme& scheme = {});
/// E ∂²ₓf(X) = −∫ λλᵀ F(λ) χ(λ) dλ.
SymMatrix weyl_hess_expectation(const FourierSymbol& symbol, const GaussianState& state,
                                const QuadratureScheme& scheme = {});

struct QuantumPriceResiduals {
  Vector mean;     // ∂μ E f − E ∂ₓf
  SymMatrix cov;   // ∂Σ E f − ½ E ∂²ₓf
  SymMatrix mixed; // ∂²μ E f − 2 ∂Σ E f
  double mean_norm() const;
  double cov_norm() const;
  double mixed_norm() const;
};

/// Residuals of the three quantum Price identities, all derivatives in μ and Σ
/// by central differences with step h. Requires S = Σ + iΘ ≻ 0 at the state
/// and at every perturbed covariance.
QuantumPriceResiduals quantum_price_residuals(const FourierSymbol& symbol, const GaussianState& state,
                                              double h, const QuadratureScheme& scheme = {});

}  // namespace weylprice
