#include "weylprice/fock.hpp"

#include "weylprice/error.hpp"

#include <cmath>
#include <string>

namespace weylprice {

namespace {

const Complex kI{0.0, 1.0};

CMatrix annihilation(int levels) {
  CMatrix a = CMatrix::Zero(levels, levels);
  for (int k = 1; k < levels; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// exp(i·H) for Hermitian H via unitary diagonalization.
CMatrix expi_hermitian(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (h + h.adjoint()));
  const Eigen::VectorXcd phases =
      es.eigenvalues().unaryExpr([](double e) { return std::exp(Complex(0.0, e)); });
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

QuadraturePair build_qp(int levels) {
  if (levels < 4) throw DomainError("Fock truncation needs N >= 4");
  const CMatrix a = annihilation(levels);
  const CMatrix ad = a.adjoint();
  const double r2 = std::sqrt(2.0);
  return {{(a + ad) / r2}, {(a - ad) / (kI * r2)}};
}

double ccr_interior_residual(const QuadraturePair& qp) {
  const int n = qp.q.levels();
  const CMatrix comm = qp.q.matrix * qp.p.matrix - qp.p.matrix * qp.q.matrix;
  const CMatrix block = comm.topLeftCorner(n - 2, n - 2) - kI * CMatrix::Identity(n - 2, n - 2);
  return block.norm();
}

GaussianState implied_state(const DensityParams& params) {
  const double r2 = std::sqrt(2.0);
  Vector mu(2);
  mu << r2 * params.alpha.real(), r2 * params.alpha.imag();
  Matrix rot(2, 2);
  rot << std::cos(params.phi), -std::sin(params.phi), std::sin(params.phi), std::cos(params.phi);
  const Matrix squeeze = Eigen::Vector2d(std::exp(2.0 * params.s), std::exp(-2.0 * params.s)).asDiagonal();
  const Matrix sigma = (params.nbar + 0.5) * rot * squeeze * rot.transpose();
  return {mu, SymMatrix::symmetric_part(sigma), AntisymMatrix::canonical(2)};
}

GaussianState GaussianDensityMatrix::implied_state() const { return weylprice::implied_state(params); }

GaussianDensityMatrix gaussian_density(const DensityParams& params, double tail_tol) {
  const int n = params.levels;
  if (n < 12) throw DomainError("Gaussian density matrices need N >= 12");
  if (params.nbar < 0.0) throw DomainError("thermal occupation must be nonnegative");

  // Thermal populations (1 − x)xᵏ with x = n̄/(n̄+1), renormalized on N levels.
  CMatrix rho = CMatrix::Zero(n, n);
  const double x = params.nbar / (params.nbar + 1.0);
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += std::pow(x, k);
  for (int k = 0; k < n; ++k) rho(k, k) = std::pow(x, k) / total;

  const CMatrix a = annihilation(n);
  const CMatrix ad = a.adjoint();
  // S(s) = exp(−is(a² − a†²)/(2i)) scales q by eˢ and p by e⁻ˢ.
  const CMatrix squeeze_gen = (a * a - ad * ad) / (2.0 * kI);
  const CMatrix squeeze = expi_hermitian(-params.s * squeeze_gen);
  // R(φ) = exp(iφ a†a) rotates (q, p) by φ.
  CMatrix rotate = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) rotate(k, k) = std::exp(Complex(0.0, params.phi * k));
  // D(α) = exp(αa† − ᾱa) = exp(iH), H = −i(αa† − ᾱa).
  const CMatrix disp_gen = -kI * (params.alpha * ad - std::conj(params.alpha) * a);
  const CMatrix displace = expi_hermitian(disp_gen);

  const CMatrix u = displace * rotate * squeeze;
  rho = u * rho * u.adjoint();
  rho = 0.5 * (rho + rho.adjoint());

  GaussianDensityMatrix out;
  out.params = params;
  double tail = 0.0;
  for (int k = n - 10; k < n; ++k) tail += rho(k, k).real();
  out.tail_mass = tail;
  if (tail > tail_tol)
    throw DomainError("Fock truncation N=" + std::to_string(n) + " too small: tail mass " +
                      std::to_string(tail) + " above " + std::to_string(tail_tol) + "; increase N");
  out.rho = rho / rho.trace().real();
  return out;
}

Complex oracle_char(const GaussianDensityMatrix& rho, const Vector& lambda) {
  if (lambda.size() != 2) throw DimensionError("Fock oracle is single-mode: λ must have length 2");
  const QuadraturePair qp = build_qp(rho.levels());
  const CMatrix gen = lambda(0) * qp.q.matrix + lambda(1) * qp.p.matrix;
  return (rho.rho * expi_hermitian(gen)).trace();
}

namespace {

Complex trace_moment(const CMatrix& rho, const MultiIndex& gamma) {
  const QuadraturePair qp = build_qp(static_cast<int>(rho.rows()));
  CMatrix prod = CMatrix::Identity(rho.rows(), rho.cols());
  for (int k = 0; k < gamma[0]; ++k) prod = prod * qp.q.matrix;
  for (int k = 0; k < gamma[1]; ++k) prod = prod * qp.p.matrix;
  return (rho * prod).trace();
}

}  // namespace

OracleMoment oracle_ordered_moment(const GaussianDensityMatrix& rho, const MultiIndex& gamma) {
  if (gamma.size() != 2) throw DimensionError("Fock oracle moments take a 2-entry multi-index");
  if (gamma.total() > 6) throw DomainError("Fock oracle moments support |γ| <= 6");
  const int need = 40 + 10 * gamma.total();
  if (rho.levels() < need)
    throw DomainError("oracle_ordered_moment needs N >= " + std::to_string(need) + ", got " +
                      std::to_string(rho.levels()));
  OracleMoment out;
  out.value = trace_moment(rho.rho, gamma);
  DensityParams finer = rho.params;
  finer.levels = rho.levels() + 10;
  const GaussianDensityMatrix refined = gaussian_density(finer, 1.0);
  out.refinement_shift = std::abs(trace_moment(refined.rho, gamma) - out.value);
  out.truncation_warning = out.refinement_shift > 1e-8;
  return out;
}

double oracle_weyl_expectation(const GaussianDensityMatrix& rho, const FourierSymbol& symbol,
                               const QuadratureScheme& scheme) {
  if (symbol.kind() != FourierSymbol::Kind::gaussian)
    throw DomainError("the Fock Weyl oracle takes Gaussian symbols only");
  if (symbol.dim() != 2) throw DimensionError("Fock oracle is single-mode: symbol must have dim 2");
  const auto llt = checked_cholesky(std::get<FourierSymbol::Gaussian>(symbol.data()).pi, "Π");
  const Matrix factor = llt.matrixL();
  const QuadraturePair qp = build_qp(rho.levels());
  // F = p_{0,Π} is the N(0, Π) density, so the integral is E_{λ~N(0,Π)} χ_ρ(λ).
  const Complex v = tensor_expectation<Complex>(scheme, 2, [&](const Vector& u) {
    const Vector l = factor * u;
    const CMatrix gen = l(0) * qp.q.matrix + l(1) * qp.p.matrix;
    return (rho.rho * expi_hermitian(gen)).trace();
  });
  if (std::abs(v.imag()) > kImagTol * std::max(1.0, std::abs(v.real())))
    throw NumericalError("oracle Weyl expectation has imaginary residue " + std::to_string(v.imag()));
  return v.real();
}

}  // namespace weylprice
