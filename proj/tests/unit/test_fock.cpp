#include "weylprice/algebra.hpp"
#include "weylprice/error.hpp"
#include "weylprice/fock.hpp"
#include "weylprice/weyl.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weylprice;

namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

const Complex kI(0.0, 1.0);

}  // namespace

TEST(BuildQpTest, Examples) {
  const QuadraturePair qp = build_qp(4);
  EXPECT_NEAR(qp.q.matrix(0, 1).real(), 1.0 / std::sqrt(2.0), 1e-15);
  const CMatrix c = qp.q.matrix * qp.p.matrix - qp.p.matrix * qp.q.matrix;
  EXPECT_LT(std::abs(c(0, 0) - kI), 1e-15);
  EXPECT_LT(std::abs(qp.q.matrix.trace()), 1e-15);
  EXPECT_LT(std::abs(qp.p.matrix.trace()), 1e-15);
  EXPECT_THROW(build_qp(3), DomainError);
}

TEST(BuildQpTest, InteriorCommutator) { EXPECT_LE(ccr_interior_residual(build_qp(60)), 1e-10); }

TEST(GaussianDensityTest, Vacuum) {
  const GaussianDensityMatrix rho = gaussian_density({});
  EXPECT_NEAR(std::abs(rho.rho(0, 0) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(rho.rho.cwiseAbs().sum(), 1.0, 1e-12);
  EXPECT_LE((rho.implied_state().cov() - SymMatrix::identity(2) * 0.5).max_abs(), 1e-15);
}

TEST(GaussianDensityTest, ThermalGeometricLaw) {
  DensityParams p;
  p.nbar = 1.0;
  const GaussianDensityMatrix rho = gaussian_density(p);
  for (int k = 0; k < 20; ++k) EXPECT_NEAR(rho.rho(k, k).real(), std::pow(0.5, k + 1), 1e-12);
  EXPECT_LE((rho.implied_state().cov() - SymMatrix::identity(2) * 1.5).max_abs(), 1e-15);
}

TEST(GaussianDensityTest, DisplacementConvention) {
  DensityParams p;
  p.alpha = 1.0;
  EXPECT_NEAR(implied_state(p).mean()(0), std::sqrt(2.0), 1e-15);
  const GaussianDensityMatrix rho = gaussian_density(p);
  EXPECT_LT(std::abs(oracle_ordered_moment(rho, MultiIndex{1, 0}).value - std::sqrt(2.0)), 1e-10);
}

TEST(GaussianDensityTest, TraceAndPositivity) {
  DensityParams p;
  p.nbar = 0.5;
  p.s = 0.4;
  p.phi = 0.8;
  p.alpha = Complex(0.7, -0.5);
  const GaussianDensityMatrix rho = gaussian_density(p);
  EXPECT_NEAR(rho.rho.trace().real(), 1.0, 1e-10);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.rho);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
}

TEST(GaussianDensityTest, TailCheck) {
  DensityParams p;
  p.nbar = 2.0;
  p.levels = 20;
  EXPECT_THROW(gaussian_density(p), DomainError);
}

TEST(OracleCharTest, Examples) {
  const GaussianDensityMatrix vac = gaussian_density({});
  EXPECT_LT(std::abs(oracle_char(vac, Vector::Zero(2)) - 1.0), 1e-12);
  EXPECT_LT(std::abs(oracle_char(vac, vec2(2, 0)) - std::exp(-1.0)), 1e-6);
  DensityParams p;
  p.nbar = 1.0;
  EXPECT_LT(std::abs(oracle_char(gaussian_density(p), vec2(1, 1)) - std::exp(-1.5)), 1e-6);
}

TEST(OracleCharTest, MatchesQuasiCharOnGrid) {
  DensityParams p;
  p.nbar = 0.5;
  p.s = -0.3;
  p.phi = 0.4;
  p.alpha = Complex(-0.6, 0.9);
  const GaussianDensityMatrix rho = gaussian_density(p);
  const GaussianState s = rho.implied_state();
  for (double a = -3; a <= 3; a += 1.5)
    for (double b = -3; b <= 3; b += 1.5)
      EXPECT_LT(std::abs(oracle_char(rho, vec2(a, b)) - quasi_char(s, vec2(a, b))), 1e-6);
}

TEST(OracleMomentTest, Examples) {
  const GaussianDensityMatrix vac = gaussian_density({});
  EXPECT_LT(std::abs(oracle_ordered_moment(vac, MultiIndex{1, 1}).value - 0.5 * kI), 1e-12);
  EXPECT_LT(std::abs(oracle_ordered_moment(vac, MultiIndex{2, 0}).value - 0.5), 1e-12);
  DensityParams p;
  p.nbar = 1.0;
  EXPECT_LT(std::abs(oracle_ordered_moment(gaussian_density(p), MultiIndex{2, 0}).value - 1.5), 1e-10);
}

TEST(OracleMomentTest, MatchesOrderedMoments) {
  DensityParams p;
  p.nbar = 0.3;
  p.s = 0.2;
  p.phi = 1.1;
  p.alpha = Complex(0.5, 0.4);
  p.levels = 80;
  const GaussianDensityMatrix rho = gaussian_density(p);
  const GaussianState s = rho.implied_state();
  for (int d = 0; d <= 4; ++d)
    for (const MultiIndex& g : multi_indices_of_degree(2, d)) {
      const OracleMoment m = oracle_ordered_moment(rho, g);
      EXPECT_LT(std::abs(m.value - ordered_moment(g, s)), 1e-8) << g.str();
      EXPECT_FALSE(m.truncation_warning) << g.str();
    }
}

TEST(OracleMomentTest, Preconditions) {
  const GaussianDensityMatrix vac = gaussian_density({});
  EXPECT_THROW(oracle_ordered_moment(vac, MultiIndex{4, 3}), DomainError);
  EXPECT_THROW(oracle_ordered_moment(vac, MultiIndex{1, 1, 0}), DimensionError);
}

TEST(OracleWeylTest, Examples) {
  const FourierSymbol f = FourierSymbol::gaussian(SymMatrix::identity(2));
  EXPECT_NEAR(oracle_weyl_expectation(gaussian_density({}), f), 2.0 / 3.0, 1e-5);
  DensityParams p;
  p.nbar = 1.0;
  EXPECT_NEAR(oracle_weyl_expectation(gaussian_density(p), f), 0.4, 1e-5);
  DensityParams d;
  d.alpha = 1.0;
  EXPECT_NEAR(oracle_weyl_expectation(gaussian_density(d), f), weyl_expectation(f, implied_state(d)), 1e-5);
  EXPECT_THROW(oracle_weyl_expectation(gaussian_density({}), FourierSymbol::plane_wave(vec2(1, 0))), DomainError);
}
