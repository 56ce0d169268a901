#include "weylprice/weyl.hpp"

#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"
#include "weylprice/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace weylprice {

FourierSymbol FourierSymbol::gaussian(SymMatrix pi) {
  if (min_eigenvalue(pi) <= kEigTol)
    throw AdmissibilityError("Gaussian symbol needs Π ≻ 0", min_eigenvalue(pi));
  return FourierSymbol(Gaussian{std::move(pi)});
}

FourierSymbol FourierSymbol::plane_wave(Vector x0, Phase phase) {
  if (x0.size() < 1) throw DimensionError("plane wave: empty frequency");
  return FourierSymbol(PlaneWave{std::move(x0), phase});
}

FourierSymbol FourierSymbol::grid(int dim, std::function<Complex(const Vector&)> fn,
                                  bool weighted_integrable) {
  if (!fn) throw DomainError("grid symbol is empty");
  if (dim < 1) throw DimensionError("grid symbol: dim must be positive");
  return FourierSymbol(Grid{dim, std::move(fn), weighted_integrable});
}

std::string_view FourierSymbol::kind_name() const {
  switch (kind()) {
    case Kind::gaussian: return "gaussian";
    case Kind::plane_wave: return "plane_wave";
    case Kind::grid: return "grid";
  }
  return "?";
}

int FourierSymbol::dim() const {
  switch (kind()) {
    case Kind::gaussian: return std::get<Gaussian>(data_).pi.order();
    case Kind::plane_wave: return static_cast<int>(std::get<PlaneWave>(data_).x0.size());
    case Kind::grid: return std::get<Grid>(data_).dim;
  }
  return 0;
}

bool FourierSymbol::weighted_integrable() const {
  if (const auto* g = std::get_if<Grid>(&data_)) return g->weighted_integrable;
  return true;
}

Complex FourierSymbol::operator()(const Vector& lambda) const {
  if (lambda.size() != dim()) throw DimensionError("symbol: λ has wrong length");
  switch (kind()) {
    case Kind::gaussian: {
      const GaussianState s(Vector::Zero(dim()), std::get<Gaussian>(data_).pi);
      return pdf(s, lambda);
    }
    case Kind::plane_wave:
      throw DomainError("plane-wave symbol is a pair of point masses, not a density");
    case Kind::grid:
      return std::get<Grid>(data_).fn(lambda);
  }
  return {};
}

Complex quasi_char(const GaussianState& state, const Vector& lambda) {
  if (lambda.size() != state.dim()) throw DimensionError("quasi_char: λ has wrong length");
  require(state, ValidityMode::quantum);
  const double quad = lambda.dot(state.cov().dense() * lambda);
  return std::exp(Complex(-0.5 * quad, lambda.dot(state.mean())));
}

namespace {

// exp(iλᵀμ − ½λᵀΣλ) without re-validating the state at every node.
Complex char_unchecked(const Vector& mean, const Matrix& cov, const Vector& lambda) {
  return std::exp(Complex(-0.5 * lambda.dot(cov * lambda), lambda.dot(mean)));
}

void check_hermitian_grid(const FourierSymbol::Grid& g) {
  RngStream rng(0x5eed, static_cast<std::uint64_t>(g.dim));
  for (int trial = 0; trial < 100; ++trial) {
    Vector l(g.dim);
    for (int k = 0; k < g.dim; ++k) l(k) = rng.uniform(-3.0, 3.0);
    const Complex a = g.fn(l);
    const Complex b = g.fn(-l);
    if (std::abs(b - std::conj(a)) > kImagTol * std::max(1.0, std::abs(a)))
      throw NumericalError("grid symbol violates F(−λ) = conj F(λ)");
  }
}

// Ψ-whitened (gaussian) or Σ-whitened (grid) λ-integral of weight(λ)·F(λ)·χ(λ).
template <class T, class Weight>
T lambda_integral(const FourierSymbol& symbol, const GaussianState& state,
                  const QuadratureScheme& scheme, const Weight& weight) {
  const int n = state.dim();
  if (symbol.dim() != n) throw DimensionError("symbol and state dimensions differ");
  if (!symbol.weighted_integrable())
    throw DomainError("symbol does not declare ∫|F|(1+|λ|²)dλ < ∞");
  require(state, ValidityMode::quantum);
  const Vector& mu = state.mean();
  const Matrix cov = state.cov().dense();

  switch (symbol.kind()) {
    case FourierSymbol::Kind::plane_wave: {
      const auto& pw = std::get<FourierSymbol::PlaneWave>(symbol.data());
      T plus = weight(pw.x0);
      plus *= char_unchecked(mu, cov, pw.x0);
      T minus = weight(Vector(-pw.x0));
      minus *= char_unchecked(mu, cov, -pw.x0);
      if (pw.phase == FourierSymbol::Phase::cos) {
        T out = plus + minus;
        out *= Complex(0.5, 0.0);
        return out;
      }
      T out = plus - minus;
      out *= Complex(0.0, -0.5);  // 1/(2i)
      return out;
    }
    case FourierSymbol::Kind::gaussian: {
      // p_{0,Π}(λ)χ(λ) = e^{iλᵀμ}·e^{−½λᵀ(Π⁻¹+Σ)λ}/((2π)^{n/2}√det Π); with
      // A = Π⁻¹ + Σ = LLᵀ and λ = L⁻ᵀu the integral becomes
      // E_u[e^{iλᵀμ}·weight(λ)] / √(det Π · det A).
      const auto pi_llt = checked_cholesky(std::get<FourierSymbol::Gaussian>(symbol.data()).pi, "Π");
      const Matrix a = pi_llt.solve(Matrix::Identity(n, n)) + cov;
      const Eigen::LLT<Matrix> a_llt(0.5 * (a + a.transpose()));
      if (a_llt.info() != Eigen::Success) throw NumericalError("Π⁻¹ + Σ is not positive definite");
      const Matrix map = a_llt.matrixU().solve(Matrix::Identity(n, n));  // L⁻ᵀ
      const double scale = std::exp(-0.5 * (log_det(pi_llt) + log_det(a_llt)));
      T out = tensor_expectation<T>(scheme, n, [&](const Vector& u) -> T {
        const Vector l = map * u;
        T w = weight(l);
        w *= std::exp(Complex(0.0, l.dot(mu)));
        return w;
      });
      out *= Complex(scale, 0.0);
      return out;
    }
    case FourierSymbol::Kind::grid: {
      const auto& g = std::get<FourierSymbol::Grid>(symbol.data());
      check_hermitian_grid(g);
      // χ's Gaussian factor is the weight: λ = L⁻ᵀu with Σ = LLᵀ.
      if (!validate(state, ValidityMode::classical).pass)
        throw DomainError("grid symbols need Σ ≻ 0 for the χ-whitened rule");
      const auto llt = checked_cholesky(state.cov(), "Σ");
      const Matrix map = llt.matrixU().solve(Matrix::Identity(n, n));
      const double scale =
          std::pow(2.0 * std::numbers::pi, 0.5 * n) * std::exp(-0.5 * log_det(llt));
      T out = tensor_expectation<T>(scheme, n, [&](const Vector& u) -> T {
        const Vector l = map * u;
        T w = weight(l);
        w *= g.fn(l) * std::exp(Complex(0.0, l.dot(mu)));
        return w;
      });
      out *= Complex(scale, 0.0);
      return out;
    }
  }
  throw DomainError("unknown symbol kind");
}

double imag_residue(const Complex& c) { return std::abs(c.imag()); }
double imag_residue(const CVector& v) { return v.imag().cwiseAbs().maxCoeff(); }
double imag_residue(const CMatrix& m) { return m.imag().cwiseAbs().maxCoeff(); }
double real_scale(const Complex& c) { return std::abs(c.real()); }
double real_scale(const CVector& v) { return v.real().cwiseAbs().maxCoeff(); }
double real_scale(const CMatrix& m) { return m.real().cwiseAbs().maxCoeff(); }

template <class T>
void require_real(const T& value, const char* what) {
  const double residue = imag_residue(value);
  if (residue > kImagTol * std::max(1.0, real_scale(value)))
    throw NumericalError(std::string(what) + ": imaginary residue " + std::to_string(residue) +
                         " exceeds 1e-9 (Hermitian symmetry of F violated)");
}

}  // namespace

double weyl_expectation(const FourierSymbol& symbol, const GaussianState& state,
                        const QuadratureScheme& scheme) {
  const Complex v = lambda_integral<Complex>(symbol, state, scheme,
                                             [](const Vector&) { return Complex(1.0, 0.0); });
  require_real(v, "weyl_expectation");
  return v.real();
}

Vector weyl_grad_expectation(const FourierSymbol& symbol, const GaussianState& state,
                             const QuadratureScheme& scheme) {
  const CVector v = lambda_integral<CVector>(symbol, state, scheme, [](const Vector& l) -> CVector {
    return Complex(0.0, 1.0) * l.cast<Complex>();
  });
  require_real(v, "weyl_grad_expectation");
  return v.real();
}

SymMatrix weyl_hess_expectation(const FourierSymbol& symbol, const GaussianState& state,
                                const QuadratureScheme& scheme) {
  const CMatrix v = lambda_integral<CMatrix>(symbol, state, scheme, [](const Vector& l) -> CMatrix {
    return -(l * l.transpose()).cast<Complex>();
  });
  require_real(v, "weyl_hess_expectation");
  return SymMatrix::symmetric_part(v.real());
}

double QuantumPriceResiduals::mean_norm() const { return max_norm(mean); }
double QuantumPriceResiduals::cov_norm() const { return max_norm(cov); }
double QuantumPriceResiduals::mixed_norm() const { return max_norm(mixed); }

QuantumPriceResiduals quantum_price_residuals(const FourierSymbol& symbol, const GaussianState& state,
                                              double h, const QuadratureScheme& scheme) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  require(state, ValidityMode::quantum_strict);

  auto at_mean = [&](const Vector& mu) { return weyl_expectation(symbol, state.with_mean(mu), scheme); };
  auto at_cov = [&](const SymMatrix& cov) {
    const GaussianState moved = state.with_cov(cov);
    const ValidityVerdict v = validate(moved, ValidityMode::quantum_strict);
    if (!v.pass)
      throw AdmissibilityError("perturbed Σ breaks S ≻ 0 (min eigenvalue " +
                                   format_number(v.min_eigenvalue) + ")",
                               v.min_eigenvalue);
    return weyl_expectation(symbol, moved, scheme);
  };

  const Vector grad = weyl_grad_expectation(symbol, state, scheme);
  const SymMatrix hess = weyl_hess_expectation(symbol, state, scheme);
  const SymMatrix frechet = fd_frechet(at_cov, state.cov(), h);

  QuantumPriceResiduals r;
  r.mean = fd_gradient(at_mean, state.mean(), h) - grad;
  r.cov = frechet - hess * 0.5;
  r.mixed = fd_hessian(at_mean, state.mean(), h) - frechet * 2.0;
  return r;
}

}  // namespace weylprice
