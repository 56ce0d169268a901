#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace weylprice {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Largest dimension accepted by the analytic operations.
inline constexpr int kMaxDim = 8;

/// Real symmetric matrix stored as its upper triangle, so symmetry cannot be
/// violated after construction.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n);

  /// Canonicalizes `m` by averaging with its transpose after checking that the
  /// largest asymmetry |m(i,j) - m(j,i)| is at most `tol`.
  static SymMatrix from_dense(const Matrix& m, double tol = 1e-12);
  /// ½(m + mᵀ) with no tolerance check.
  static SymMatrix symmetric_part(const Matrix& m);
  static SymMatrix identity(int n);
  static SymMatrix zero(int n) { return SymMatrix(n); }
  static SymMatrix outer(const Vector& v);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const;
  void set(int i, int j, double value);

  Matrix dense() const;

  /// Frobenius inner product Tr(KN).
  double inner(const SymMatrix& other) const;
  double max_abs() const;

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator*(double s) const;
  friend SymMatrix operator*(double s, const SymMatrix& m) { return m * s; }

 private:
  std::size_t slot(int i, int j) const;

  int n_ = 0;
  std::vector<double> upper_;
};

/// Real antisymmetric matrix stored as its strict upper triangle; the diagonal
/// is identically zero.
class AntisymMatrix {
 public:
  AntisymMatrix() = default;
  explicit AntisymMatrix(int n);

  static AntisymMatrix from_dense(const Matrix& m, double tol = 1e-12);
  static AntisymMatrix zero(int n) { return AntisymMatrix(n); }
  /// Θ = ½J for one position-momentum pair, repeated blockwise for n = 2m.
  static AntisymMatrix canonical(int n, double scale = 0.5);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const;
  /// Sets θ_ij (i != j); θ_ji becomes -value.
  void set(int i, int j, double value);

  Matrix dense() const;
  bool is_zero() const;
  AntisymMatrix operator-() const;
  AntisymMatrix operator*(double s) const;

 private:
  std::size_t slot(int i, int j) const;

  int n_ = 0;
  std::vector<double> strict_upper_;
};

/// Smallest eigenvalue of a real symmetric matrix.
double min_eigenvalue(const SymMatrix& m);

/// Smallest eigenvalue of the Hermitian matrix Σ + iΘ.
double min_eigenvalue_hermitian(const SymMatrix& sigma, const AntisymMatrix& theta);

/// Cholesky factor with a positive-definiteness guard; throws AdmissibilityError.
Eigen::LLT<Matrix> checked_cholesky(const SymMatrix& m, const char* what);

/// Squared Σ⁻¹-norm of v given a Cholesky factorization of Σ.
double inverse_quadratic(const Eigen::LLT<Matrix>& llt, const Vector& v);

/// log det Σ from its Cholesky factorization.
double log_det(const Eigen::LLT<Matrix>& llt);

}  // namespace weylprice
