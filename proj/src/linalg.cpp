#include "weylprice/linalg.hpp"

#include "weylprice/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace weylprice {

SymMatrix::SymMatrix(int n) : n_(n), upper_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {
  if (n < 0) throw DimensionError("SymMatrix: negative order");
}

std::size_t SymMatrix::slot(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_) throw DimensionError("SymMatrix: index out of range");
  // Row-major packed upper triangle.
  return static_cast<std::size_t>(i * n_ - i * (i - 1) / 2 + (j - i));
}

SymMatrix SymMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("SymMatrix: matrix is not square");
  const int n = static_cast<int>(m.rows());
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > tol) {
        throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      out.upper_[out.slot(i, j)] = 0.5 * (m(i, j) + m(j, i));
    }
  }
  return out;
}

SymMatrix SymMatrix::symmetric_part(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("SymMatrix: matrix is not square");
  const int n = static_cast<int>(m.rows());
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.upper_[out.slot(i, j)] = 0.5 * (m(i, j) + m(j, i));
  return out;
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix out(n);
  for (int i = 0; i < n; ++i) out.set(i, i, 1.0);
  return out;
}

SymMatrix SymMatrix::outer(const Vector& v) {
  const int n = static_cast<int>(v.size());
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.upper_[out.slot(i, j)] = v(i) * v(j);
  return out;
}

double SymMatrix::operator()(int i, int j) const { return upper_[slot(i, j)]; }

void SymMatrix::set(int i, int j, double value) { upper_[slot(i, j)] = value; }

Matrix SymMatrix::dense() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) m(i, j) = m(j, i) = upper_[slot(i, j)];
  return m;
}

double SymMatrix::inner(const SymMatrix& other) const {
  if (other.n_ != n_) throw DimensionError("SymMatrix::inner: order mismatch");
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    s += (*this)(i, i) * other(i, i);
    for (int j = i + 1; j < n_; ++j) s += 2.0 * (*this)(i, j) * other(i, j);
  }
  return s;
}

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : upper_) m = std::max(m, std::abs(v));
  return m;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  if (o.n_ != n_) throw DimensionError("SymMatrix: order mismatch");
  SymMatrix out(*this);
  for (std::size_t k = 0; k < upper_.size(); ++k) out.upper_[k] += o.upper_[k];
  return out;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const { return *this + o * -1.0; }

SymMatrix SymMatrix::operator*(double s) const {
  SymMatrix out(*this);
  for (double& v : out.upper_) v *= s;
  return out;
}

AntisymMatrix::AntisymMatrix(int n)
    : n_(n), strict_upper_(n > 0 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0, 0.0) {
  if (n < 0) throw DimensionError("AntisymMatrix: negative order");
}

std::size_t AntisymMatrix::slot(int i, int j) const {
  // i < j assumed by callers.
  if (i < 0 || j >= n_ || i >= j) throw DimensionError("AntisymMatrix: index out of range");
  return static_cast<std::size_t>(i * (2 * n_ - i - 1) / 2 + (j - i - 1));
}

AntisymMatrix AntisymMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("AntisymMatrix: matrix is not square");
  const int n = static_cast<int>(m.rows());
  AntisymMatrix out(n);
  for (int i = 0; i < n; ++i) {
    if (std::abs(m(i, i)) > tol)
      throw InputError("CCR matrix has nonzero diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) + m(j, i)) > tol) {
        throw InputError("matrix is not antisymmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      out.strict_upper_[out.slot(i, j)] = 0.5 * (m(i, j) - m(j, i));
    }
  }
  return out;
}

AntisymMatrix AntisymMatrix::canonical(int n, double scale) {
  if (n % 2 != 0) throw DimensionError("canonical CCR matrix needs an even dimension");
  AntisymMatrix out(n);
  for (int k = 0; k + 1 < n; k += 2) out.set(k, k + 1, scale);
  return out;
}

double AntisymMatrix::operator()(int i, int j) const {
  if (i == j) {
    if (i < 0 || i >= n_) throw DimensionError("AntisymMatrix: index out of range");
    return 0.0;
  }
  return i < j ? strict_upper_[slot(i, j)] : -strict_upper_[slot(j, i)];
}

void AntisymMatrix::set(int i, int j, double value) {
  if (i == j) throw DomainError("AntisymMatrix: diagonal is fixed at zero");
  if (i < j)
    strict_upper_[slot(i, j)] = value;
  else
    strict_upper_[slot(j, i)] = -value;
}

Matrix AntisymMatrix::dense() const {
  Matrix m = Matrix::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      m(i, j) = strict_upper_[slot(i, j)];
      m(j, i) = -m(i, j);
    }
  return m;
}

bool AntisymMatrix::is_zero() const {
  return std::all_of(strict_upper_.begin(), strict_upper_.end(),
                     [](double v) { return v == 0.0; });
}

AntisymMatrix AntisymMatrix::operator-() const { return *this * -1.0; }

AntisymMatrix AntisymMatrix::operator*(double s) const {
  AntisymMatrix out(*this);
  for (double& v : out.strict_upper_) v *= s;
  return out;
}

double min_eigenvalue(const SymMatrix& m) {
  if (m.order() == 0) throw DimensionError("empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m.dense(), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double min_eigenvalue_hermitian(const SymMatrix& sigma, const AntisymMatrix& theta) {
  if (sigma.order() != theta.order()) throw DimensionError("Σ and Θ orders differ");
  if (sigma.order() == 0) throw DimensionError("empty matrix");
  CMatrix s = sigma.dense().cast<Complex>() + Complex(0.0, 1.0) * theta.dense().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Eigen::LLT<Matrix> checked_cholesky(const SymMatrix& m, const char* what) {
  Eigen::LLT<Matrix> llt(m.dense());
  if (llt.info() != Eigen::Success) {
    throw AdmissibilityError(std::string(what) + " is not positive definite", min_eigenvalue(m));
  }
  return llt;
}

double inverse_quadratic(const Eigen::LLT<Matrix>& llt, const Vector& v) {
  const Vector w = llt.matrixL().solve(v);
  return w.squaredNorm();
}

double log_det(const Eigen::LLT<Matrix>& llt) {
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace weylprice
