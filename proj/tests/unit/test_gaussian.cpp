#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"
#include "weylprice/gaussian.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace weylprice;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

SymMatrix sym(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index k = 0;
    for (double x : r) m(i, k++) = x;
    ++i;
  }
  return SymMatrix::from_dense(m);
}

}  // namespace

TEST(SymMatrixTest, StorageIsSymmetric) {
  SymMatrix m(3);
  m.set(0, 2, 1.5);
  EXPECT_EQ(m(2, 0), 1.5);
  EXPECT_TRUE(m.dense().isApprox(m.dense().transpose()));
}

TEST(SymMatrixTest, RejectsAsymmetricInput) {
  Matrix m(2, 2);
  m << 1, 2, 3, 1;
  EXPECT_THROW(SymMatrix::from_dense(m), InputError);
}

TEST(SymMatrixTest, FrobeniusInner) {
  const SymMatrix a = sym({{1, 2}, {2, 3}});
  const SymMatrix b = sym({{4, 5}, {5, 6}});
  EXPECT_DOUBLE_EQ(a.inner(b), (a.dense() * b.dense()).trace());
}

TEST(AntisymMatrixTest, CanonicalBlocks) {
  const AntisymMatrix t = AntisymMatrix::canonical(4);
  EXPECT_EQ(t(0, 1), 0.5);
  EXPECT_EQ(t(1, 0), -0.5);
  EXPECT_EQ(t(2, 3), 0.5);
  EXPECT_EQ(t(0, 2), 0.0);
  EXPECT_EQ(t(1, 1), 0.0);
}

TEST(AntisymMatrixTest, RejectsNonzeroDiagonal) {
  Matrix m(2, 2);
  m << 0.1, 1, -1, 0;
  EXPECT_THROW(AntisymMatrix::from_dense(m), InputError);
}

TEST(GaussianStateTest, RejectsBadDimensions) {
  EXPECT_THROW(GaussianState(Vector::Zero(2), SymMatrix::identity(3)), DimensionError);
  EXPECT_THROW(GaussianState(Vector::Zero(9), SymMatrix::identity(9)), DimensionError);
  EXPECT_THROW(GaussianState(Vector::Zero(2), SymMatrix::identity(2), AntisymMatrix::zero(3)), DimensionError);
}

TEST(ValidateTest, VacuumIsQuantumButNotStrict) {
  const GaussianState vac = GaussianState::vacuum();
  const ValidityVerdict strict = validate(vac, ValidityMode::quantum_strict);
  EXPECT_FALSE(strict.pass);
  EXPECT_NEAR(strict.min_eigenvalue, 0.0, 1e-14);
  EXPECT_TRUE(validate(vac, ValidityMode::quantum).pass);
}

TEST(ValidateTest, IdentityCovarianceIsStrict) {
  const GaussianState s(Vector::Zero(2), SymMatrix::identity(2), AntisymMatrix::canonical(2));
  const ValidityVerdict v = validate(s, ValidityMode::quantum_strict);
  EXPECT_TRUE(v.pass);
  EXPECT_NEAR(v.min_eigenvalue, 0.5, 1e-14);
}

TEST(ValidateTest, ZeroCovarianceIsNotClassical) {
  const GaussianState s(Vector::Zero(1), SymMatrix::zero(1));
  EXPECT_FALSE(validate(s, ValidityMode::classical).pass);
  EXPECT_THROW(require(s, ValidityMode::classical), AdmissibilityError);
}

TEST(ValidateTest, IndefiniteQuantumCovariance) {
  const GaussianState s(Vector::Zero(2), SymMatrix::identity(2) * 0.1, AntisymMatrix::canonical(2));
  const ValidityVerdict v = validate(s, ValidityMode::quantum);
  EXPECT_FALSE(v.pass);
  EXPECT_NEAR(v.min_eigenvalue, -0.4, 1e-14);
}

TEST(ValidateTest, ModesAreMonotone) {
  RngStream rng(11, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * (1 + trial % 2);
    const AntisymMatrix theta = AntisymMatrix::canonical(n);
    const GaussianState s(Vector::Zero(n), random_spd(rng, n, rng.uniform(0.0, 0.8)), theta);
    if (validate(s, ValidityMode::quantum_strict).pass) EXPECT_TRUE(validate(s, ValidityMode::quantum).pass);
    const GaussianState c = s.with_ccr(AntisymMatrix::zero(n));
    if (validate(c, ValidityMode::quantum).pass && validate(c, ValidityMode::classical).min_eigenvalue > kEigTol)
      EXPECT_TRUE(validate(c, ValidityMode::classical).pass);
  }
}

TEST(PdfTest, StandardNormalPeak) {
  EXPECT_NEAR(pdf(GaussianState::standard(1), vec({0})), 1.0 / std::sqrt(2 * std::numbers::pi), 1e-15);
  EXPECT_NEAR(pdf(GaussianState::standard(2), vec({0, 0})), 1.0 / (2 * std::numbers::pi), 1e-15);
}

TEST(PdfTest, TwoByTwoAgainstAdjugate) {
  const GaussianState s(vec({1, 2}), sym({{2, 1}, {1, 2}}));
  // det = 3, Σ⁻¹ = [[2,-1],[-1,2]]/3, d = x − μ = (−1, −2).
  const double q = (2 * 1 - 2 * 1 * 2 + 2 * 4) / 3.0;
  const double expected = std::exp(-0.5 * q) / (2 * std::numbers::pi * std::sqrt(3.0));
  EXPECT_NEAR(pdf(s, vec({0, 0})), expected, 1e-15);
}

TEST(PdfTest, SingularCovarianceThrows) {
  EXPECT_THROW(pdf(GaussianState(Vector::Zero(1), SymMatrix::zero(1)), vec({0})), AdmissibilityError);
}

TEST(PdfTest, IntegratesToOne) {
  RngStream rng(3, 1);
  for (int n = 1; n <= 3; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    // ∫p dx = E[p(X)/p(X)]; a constant test function gives the quadrature normalization.
    const double total = expect_quadrature(TestFunction::constant(n, 1.0), s).value;
    EXPECT_NEAR(total, 1.0, 1e-8);
  }
}

TEST(LogGradMeanTest, Examples) {
  const GaussianState s(vec({0.3, -1}), sym({{2, 0.5}, {0.5, 1}}));
  EXPECT_LT(log_grad_mean(s, s.mean()).norm(), 1e-15);
  EXPECT_NEAR(log_grad_mean(GaussianState(vec({0}), sym({{4}})), vec({2}))(0), 0.5, 1e-15);
}

TEST(LogGradMeanTest, MatchesFiniteDifferenceInMean) {
  RngStream rng(5, 2);
  for (int n = 1; n <= 3; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    const Vector x = random_vector(rng, n);
    const Vector fd = fd_gradient([&](const Vector& mu) { return std::log(pdf(s.with_mean(mu), x)); }, s.mean(), 1e-4);
    EXPECT_LT((fd - log_grad_mean(s, x)).cwiseAbs().maxCoeff(), 1e-7);
    // First relation of the x-derivative: ∂μ ln p = −∂x ln p.
    const Vector fdx = fd_gradient([&](const Vector& y) { return std::log(pdf(s, y)); }, x, 1e-4);
    EXPECT_LT((fdx + log_grad_mean(s, x)).norm(), 1e-6 * std::max(1.0, fdx.norm()));
  }
}

TEST(LogFrechetCovTest, ScalarExamples) {
  const GaussianState s = GaussianState::standard(1);
  EXPECT_NEAR(log_frechet_cov(s, vec({0}))(0, 0), -0.5, 1e-15);
  EXPECT_NEAR(log_frechet_cov(s, vec({1}))(0, 0), 0.0, 1e-15);
}

TEST(LogFrechetCovTest, DirectionalFiniteDifference) {
  RngStream rng(7, 3);
  const GaussianState s = random_classical_state(rng, 2);
  const Vector x = random_vector(rng, 2);
  const SymMatrix g = log_frechet_cov(s, x);
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = rng.normal();
    d(1, 1) = rng.normal();
    d(0, 1) = d(1, 0) = rng.normal();
    const SymMatrix delta = SymMatrix::from_dense(d);
    const double p = pdf(s, x);
    const double fd = (pdf(s.with_cov(s.cov() + delta * h), x) - pdf(s.with_cov(s.cov() - delta * h), x)) / (2 * h * p);
    EXPECT_NEAR(fd, g.inner(delta), 1e-7);
  }
}

TEST(LogFrechetCovTest, SecondRelationWithHessianInX) {
  RngStream rng(8, 4);
  for (int n = 1; n <= 3; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    const Vector x = random_vector(rng, n);
    const SymMatrix hess = fd_hessian([&](const Vector& y) { return pdf(s, y); }, x, 1e-4);
    const Matrix analytic = 2.0 * pdf(s, x) * log_frechet_cov(s, x).dense();
    EXPECT_LT((hess.dense() - analytic).cwiseAbs().maxCoeff(), 1e-4 * std::max(1e-3, analytic.cwiseAbs().maxCoeff()));
  }
}

TEST(FrechetIdentitiesTest, Examples) {
  const auto [a, b] = frechet_identities(SymMatrix::identity(2), vec({1, 0}));
  EXPECT_TRUE(a.dense().isApprox(Matrix::Identity(2, 2)));
  Matrix e = Matrix::Zero(2, 2);
  e(0, 0) = -1;
  EXPECT_TRUE(b.dense().isApprox(e));

  const auto [c, d] = frechet_identities(SymMatrix::identity(2) * 2.0, vec({0, 0}));
  EXPECT_TRUE(c.dense().isApprox(0.5 * Matrix::Identity(2, 2)));
  EXPECT_EQ(d.max_abs(), 0.0);
}

TEST(FrechetIdentitiesTest, MatchFiniteDifferences) {
  RngStream rng(9, 5);
  for (int n = 1; n <= 3; ++n) {
    const SymMatrix cov = random_spd(rng, n);
    const Vector v = random_vector(rng, n);
    const auto [dlogdet, dquad] = frechet_identities(cov, v);
    const double h = 1e-5;
    const SymMatrix fd_logdet = fd_frechet(
        [](const SymMatrix& c) { return std::log(c.dense().determinant()); }, cov, h);
    const SymMatrix fd_quad = fd_frechet(
        [&](const SymMatrix& c) { return v.dot(c.dense().ldlt().solve(v)); }, cov, h);
    EXPECT_LT((fd_logdet - dlogdet).max_abs(), 1e-7);
    EXPECT_LT((fd_quad - dquad).max_abs(), 1e-6);
    // Second output is negative semidefinite of rank ≤ 1.
    Eigen::SelfAdjointEigenSolver<Matrix> es(dquad.dense());
    EXPECT_LE(es.eigenvalues().maxCoeff(), 1e-12);
    if (n > 1) EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-12);
  }
}

TEST(HeatIdentityTest, Examples) {
  EXPECT_LE(heat_identity_residual(SymMatrix::identity(1), 1.0, vec({0}), 1e-4), 1e-6);
  EXPECT_LE(heat_identity_residual(SymMatrix::identity(2), 0.5, vec({1, -1}), 1e-4), 1e-6);
  EXPECT_LE(heat_identity_residual_exact(SymMatrix::identity(1), 1.0, vec({0})), 1e-15);
}

TEST(HeatIdentityTest, StepMustKeepTimePositive) {
  EXPECT_THROW(heat_identity_residual(SymMatrix::identity(1), 1e-5, vec({0}), 1e-4), DomainError);
}

TEST(QuadraticFormTest, ExpectationFormula) {
  const QuadraticForm q{vec({1, -2}), sym({{2, 0.5}, {0.5, 1}})};
  const Vector mu = vec({0.3, 0.7});
  const SymMatrix cov = sym({{1, 0.2}, {0.2, 0.5}});
  const double expected = q.linear.dot(mu) + 0.5 * (mu.dot(q.quadratic.dense() * mu) + q.quadratic.inner(cov));
  EXPECT_NEAR(q.expectation(mu, cov), expected, 1e-15);
  EXPECT_NEAR(q(mu), q.linear.dot(mu) + 0.5 * mu.dot(q.quadratic.dense() * mu), 1e-15);
}

TEST(DefaultStepTest, CubeRootOfEpsilon) {
  EXPECT_NEAR(default_step(), std::cbrt(std::numeric_limits<double>::epsilon()), 1e-20);
  EXPECT_NEAR(default_step(10.0), 10.0 * std::cbrt(std::numeric_limits<double>::epsilon()), 1e-18);
}
