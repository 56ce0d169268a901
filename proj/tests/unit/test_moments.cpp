#include "weylprice/algebra.hpp"
#include "weylprice/error.hpp"
#include "weylprice/finite_difference.hpp"
#include "weylprice/moments.hpp"
#include "weylprice/qem.hpp"
#include "weylprice/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weylprice;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

GaussianState classical_vacuum() { return GaussianState(Vector::Zero(2), SymMatrix::identity(2) * 0.5); }

}  // namespace

TEST(ExpectQuadratureTest, Exponential) {
  const MomentEstimate e = expect_quadrature(TestFunction::exponential(vec({1, 0})), GaussianState::standard(2));
  EXPECT_NEAR(e.value, std::exp(0.5), 1e-13);
  EXPECT_EQ(e.method, MomentMethod::quadrature);
  EXPECT_FALSE(e.std_error.has_value());
  EXPECT_EQ(e.nodes_or_samples, 1600u);
}

TEST(ExpectQuadratureTest, QuadraticHalfTrace) {
  const TestFunction f = TestFunction::quadratic({Vector::Zero(2), SymMatrix::identity(2)});
  EXPECT_NEAR(expect_quadrature(f, GaussianState::standard(2)).value, 1.0, 1e-14);
}

TEST(ExpectQuadratureTest, GaussianExponentialTwoThirds) {
  const TestFunction f = TestFunction::gaussian_exponential(SymMatrix::identity(2));
  EXPECT_NEAR(expect_quadrature(f, classical_vacuum()).value, 2.0 / 3.0, 1e-14);
}

TEST(ExpectQuadratureTest, GaussianExponentialMatchesClosedForm) {
  RngStream rng(21, 0);
  for (int n = 1; n <= 4; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    const SymMatrix pi = random_spd(rng, n, 0.2) * 2.0;
    const double q = expect_quadrature(TestFunction::gaussian_exponential(pi), s, {n == 4 ? 12 : 30}).value;
    EXPECT_NEAR(q, qem_closed(QemProblem(s, pi)), 1e-13);
  }
}

TEST(ExpectQuadratureTest, BudgetAndDimensionLimits) {
  QuadratureScheme tight{40, 1000};
  EXPECT_THROW(expect_quadrature(TestFunction::constant(2, 1.0), GaussianState::standard(2), tight), BudgetError);
  EXPECT_THROW(expect_quadrature(TestFunction::constant(5, 1.0), GaussianState::standard(5)), DimensionError);
}

TEST(ExpectQuadratureTest, NonFiniteIntegrandThrows) {
  const TestFunction f = TestFunction::callable(1, [](const Vector& x) { return x(0) > 1.0 ? NAN : 0.0; });
  EXPECT_THROW(expect_quadrature(f, GaussianState::standard(1)), NumericalError);
}

TEST(ExpectQuadratureTest, PolynomialsMatchIsserlis) {
  RngStream rng(22, 0);
  for (int n = 1; n <= 3; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    for (int d = 0; d <= 6; ++d) {
      for (const MultiIndex& g : multi_indices_of_degree(n, d)) {
        const double q = expect_quadrature(TestFunction::polynomial(n, {{g, 1.0}}), s, {d + 2}).value;
        const double w = wick_oracle(g, s.mean(), {s.cov(), s.ccr()}, WickOrdering::symmetrized).real();
        EXPECT_NEAR(q, w, 1e-10 * std::max(1.0, std::abs(w))) << g.str();
      }
    }
  }
}

TEST(MonteCarloTest, ConstantHasZeroError) {
  const MomentEstimate e = expect_monte_carlo(TestFunction::constant(2, 1.0), GaussianState::standard(2), 100, 1);
  EXPECT_EQ(e.value, 1.0);
  EXPECT_EQ(*e.std_error, 0.0);
  EXPECT_EQ(e.method, MomentMethod::monte_carlo);
}

TEST(MonteCarloTest, ExponentialWithinFourStandardErrors) {
  const MomentEstimate e =
      expect_monte_carlo(TestFunction::exponential(vec({1, 0})), GaussianState::standard(2), 1000000, 2024);
  EXPECT_LE(std::abs(e.value - std::exp(0.5)), 4.0 * *e.std_error);
}

TEST(MonteCarloTest, SameSeedIsBitwiseIdentical) {
  const TestFunction f = TestFunction::exponential(vec({0.3, -0.2}));
  const MomentEstimate a = expect_monte_carlo(f, GaussianState::standard(2), 5000, 77);
  const MomentEstimate b = expect_monte_carlo(f, GaussianState::standard(2), 5000, 77);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(*a.std_error, *b.std_error);
}

TEST(MonteCarloTest, NeedsTwoSamples) {
  EXPECT_THROW(expect_monte_carlo(TestFunction::constant(1, 1.0), GaussianState::standard(1), 1, 0), DomainError);
}

TEST(MonteCarloTest, AgreesWithQuadratureOnGaussianExponentials) {
  RngStream rng(23, 0);
  const GaussianState s = random_classical_state(rng, 2);
  const TestFunction f = TestFunction::gaussian_exponential(random_spd(rng, 2));
  const double q = expect_quadrature(f, s).value;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const MomentEstimate e = expect_monte_carlo(f, s, 20000, seed);
    EXPECT_LE(std::abs(e.value - q), 5.0 * *e.std_error) << "seed " << seed;
  }
}

TEST(PriceMeanTest, QuadraticIsExact) {
  RngStream rng(24, 0);
  const GaussianState s = random_classical_state(rng, 3);
  const TestFunction f = TestFunction::quadratic({random_vector(rng, 3), random_spd(rng, 3)});
  EXPECT_LE(max_norm(price_mean_residual(f, s, 1e-3)), 1e-8);
}

TEST(PriceMeanTest, GaussianExponentialOnVacuumCovariance) {
  const TestFunction f = TestFunction::gaussian_exponential(SymMatrix::identity(2));
  EXPECT_LE(max_norm(price_mean_residual(f, classical_vacuum().with_mean(vec({0.3, -0.4})), 1e-4)), 1e-5);
}

TEST(PriceMeanTest, ExponentialGradientIsGLambda) {
  const GaussianState s(vec({0.2, -0.1}), SymMatrix::identity(2));
  const Vector lambda = vec({0.5, -0.3});
  EXPECT_LE(max_norm(price_mean_residual(TestFunction::exponential(lambda), s, 1e-4)), 1e-8);
  EXPECT_LT((expect_gradient(TestFunction::exponential(lambda), s) - mgf(s, lambda) * lambda).norm(), 1e-12);
}

TEST(PriceCovTest, QuadraticIsExact) {
  RngStream rng(25, 0);
  const GaussianState s = random_classical_state(rng, 3);
  const SymMatrix r = random_spd(rng, 3);
  const TestFunction f = TestFunction::quadratic({Vector::Zero(3), r});
  EXPECT_LE(price_cov_residual(f, s, 1e-3).max_abs(), 1e-8);
  // Off-diagonal right-hand side E ∂ⱼ∂ₖf is r_jk exactly.
  EXPECT_NEAR(expect_hessian(f, s)(0, 1), r(0, 1), 1e-14);
}

TEST(PriceCovTest, GaussianExponential) {
  const TestFunction f = TestFunction::gaussian_exponential(SymMatrix::identity(2));
  EXPECT_LE(price_cov_residual(f, classical_vacuum(), 1e-4).max_abs(), 1e-5);
}

TEST(PriceCovTest, ExponentialRightHandSide) {
  const GaussianState s(vec({0.2, -0.1}), SymMatrix::identity(2));
  const Vector lambda = vec({0.5, -0.3});
  const TestFunction f = TestFunction::exponential(lambda);
  const Matrix rhs = 0.5 * mgf(s, lambda) * lambda * lambda.transpose();
  EXPECT_LT((0.5 * expect_hessian(f, s) - rhs).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE(price_cov_residual(f, s, 1e-4).max_abs(), 1e-8);
}

TEST(PriceCovTest, InadmissiblePerturbationThrows) {
  const GaussianState s(Vector::Zero(1), SymMatrix::identity(1) * 1e-4);
  EXPECT_THROW(price_cov_residual(TestFunction::exponential(vec({1})), s, 1e-3), AdmissibilityError);
}

TEST(PriceCovTest, ShrinksQuadraticallyInH) {
  RngStream rng(26, 0);
  for (int n = 1; n <= 3; ++n) {
    const GaussianState s = random_classical_state(rng, n);
    const TestFunction f = TestFunction::exponential(random_vector(rng, n, 0.6));
    const double coarse = price_cov_residual(f, s, 2e-3).max_abs();
    const double fine = price_cov_residual(f, s, 1e-3).max_abs();
    EXPECT_GE(coarse / fine, 3.0);
  }
}

TEST(PriceRepeatedTest, FirstOrderIsCovResidualEntry) {
  RngStream rng(27, 0);
  const GaussianState s = random_classical_state(rng, 2);
  const TestFunction f = TestFunction::exponential(vec({0.4, 0.3}));
  const SymMatrix c = price_cov_residual(f, s, 1e-3);
  EXPECT_NEAR(price_repeated_residual(f, s, 0, 1, 1, 1e-3), std::abs(c(0, 1)), 1e-12);
  EXPECT_NEAR(price_repeated_residual(f, s, 1, 1, 1, 1e-3), std::abs(c(1, 1)), 1e-12);
}

TEST(PriceRepeatedTest, SecondOrderExponentialDiagonal) {
  const GaussianState s(vec({0.1, 0.2}), SymMatrix::identity(2));
  EXPECT_LE(price_repeated_residual(TestFunction::exponential(vec({0.5, -0.4})), s, 0, 0, 2, 1e-3), 1e-7);
}

TEST(PriceRepeatedTest, SecondOrderQuarticOffDiagonal) {
  // f = x₁²x₂²: E ∂₁²∂₂² f = 4.
  const TestFunction f = TestFunction::polynomial(2, {{MultiIndex{2, 2}, 1.0}});
  const GaussianState s(vec({0.3, -0.2}), SymMatrix::from_dense((Matrix(2, 2) << 1.0, 0.3, 0.3, 0.8).finished()));
  EXPECT_NEAR(expect_partial(f, s, MultiIndex{2, 2}), 4.0, 1e-12);
  EXPECT_LE(price_repeated_residual(f, s, 0, 1, 2, 1e-2), 1e-7);
}

TEST(PriceRepeatedTest, RejectsHigherOrders) {
  EXPECT_THROW(price_repeated_residual(TestFunction::exponential(vec({1})), GaussianState::standard(1), 0, 0, 3, 1e-3),
               DomainError);
}

TEST(MgfTest, Examples) {
  EXPECT_EQ(mgf(GaussianState::standard(2), Vector::Zero(2)), 1.0);
  EXPECT_NEAR(mgf(GaussianState::standard(2), vec({1, 0})), std::exp(0.5), 1e-15);
}

TEST(MgfTest, CauchySchwarz) {
  RngStream rng(28, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const GaussianState s = random_classical_state(rng, n);
    const Vector l = random_vector(rng, n);
    EXPECT_GE(mgf(s, l) * mgf(s, -l), 1.0);
  }
}

TEST(DynamicIdentityTest, ConstantPath) {
  const QuadraticForm q{vec({1, 0}), SymMatrix::identity(2)};
  std::vector<PathSample> path;
  for (int i = 0; i < 5; ++i) path.push_back({0.1 * i, vec({1, 2}), SymMatrix::identity(2)});
  EXPECT_EQ(dynamic_identity_residual(q, path), 0.0);
}

TEST(DynamicIdentityTest, LinearDrift) {
  const QuadraticForm q{vec({1, 0}), SymMatrix::identity(2)};
  std::vector<PathSample> path;
  const double h = 1e-3;
  for (int i = 0; i <= 20; ++i) {
    const double t = i * h;
    path.push_back({t, vec({t, 0}), SymMatrix::identity(2) * (1 + t)});
  }
  EXPECT_LE(dynamic_identity_residual(q, path), 1e-6);
}

TEST(DynamicIdentityTest, LinearFunctionFixedCovariance) {
  const QuadraticForm q{vec({1, -2}), SymMatrix::zero(2)};
  std::vector<PathSample> path;
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.01 * i;
    path.push_back({t, vec({std::sin(t), t * t}), SymMatrix::identity(2)});
  }
  EXPECT_LE(dynamic_identity_residual(q, path), 1e-10);
}

TEST(DynamicIdentityTest, Preconditions) {
  const QuadraticForm q{vec({1}), SymMatrix::identity(1)};
  std::vector<PathSample> two = {{0, vec({0}), SymMatrix::identity(1)}, {1, vec({0}), SymMatrix::identity(1)}};
  EXPECT_THROW(dynamic_identity_residual(q, two), DomainError);
  std::vector<PathSample> unordered = {
      {0, vec({0}), SymMatrix::identity(1)}, {0, vec({0}), SymMatrix::identity(1)}, {1, vec({0}), SymMatrix::identity(1)}};
  EXPECT_THROW(dynamic_identity_residual(q, unordered), DomainError);
}

TEST(TestFunctionTest, AnalyticDerivativesMatchFiniteDifferences) {
  RngStream rng(29, 0);
  const int n = 3;
  const Vector x = random_vector(rng, n);
  const std::vector<TestFunction> fs = {
      TestFunction::quadratic({random_vector(rng, n), random_spd(rng, n)}),
      TestFunction::gaussian_exponential(random_spd(rng, n)),
      TestFunction::exponential(random_vector(rng, n, 0.5)),
      TestFunction::polynomial(n, {{MultiIndex{2, 1, 0}, 1.5}, {MultiIndex{0, 0, 3}, -0.5}}),
  };
  for (const TestFunction& f : fs) {
    const Vector fd = fd_gradient([&](const Vector& y) { return f(y); }, x, 1e-5);
    EXPECT_LT((fd - f.gradient(x)).cwiseAbs().maxCoeff(), 1e-7) << f.kind_name();
    const SymMatrix fh = fd_hessian([&](const Vector& y) { return f(y); }, x, 1e-4);
    EXPECT_LT((fh.dense() - f.hessian(x)).cwiseAbs().maxCoeff(), 1e-5) << f.kind_name();
    EXPECT_NEAR(f.partial(x, MultiIndex{1, 1, 0}), f.hessian(x)(0, 1), 1e-10) << f.kind_name();
  }
}

TEST(TestFunctionTest, CallableFallsBackToFiniteDifferences) {
  const TestFunction f = TestFunction::callable(2, [](const Vector& x) { return std::sin(x(0)) * std::cos(x(1)); });
  EXPECT_FALSE(f.analytic_derivatives());
  const Vector x = vec({0.3, -0.7});
  EXPECT_NEAR(f.gradient(x)(0), std::cos(0.3) * std::cos(-0.7), kCallableTolerance);
  EXPECT_NEAR(f.hessian(x)(0, 1), -std::cos(0.3) * std::sin(-0.7), kCallableTolerance);
}

TEST(TestFunctionTest, GaussianExponentialNeedsPositiveDefinitePi) {
  EXPECT_THROW(TestFunction::gaussian_exponential(SymMatrix::zero(2)), AdmissibilityError);
}
