#include "weylprice/error.hpp"
#include "weylprice/multi_index.hpp"
#include "weylprice/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace weylprice;

TEST(GaussHermiteTest, WeightsSumToOne) {
  for (int order : {2, 5, 20, 40, 60}) {
    const GaussHermiteRule& r = gauss_hermite(order);
    EXPECT_EQ(r.order(), order);
    EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 1.0, 1e-14);
  }
}

TEST(GaussHermiteTest, ExactNormalMoments) {
  // E Z^{2k} = (2k − 1)!!
  const GaussHermiteRule& r = gauss_hermite(10);
  double dfact = 1.0;
  for (int k = 0; k <= 9; ++k) {
    double m = 0.0;
    for (int i = 0; i < r.order(); ++i) m += r.weights[i] * std::pow(r.nodes[i], 2 * k);
    EXPECT_NEAR(m, dfact, 1e-11 * dfact) << "k=" << k;
    dfact *= 2 * k + 1;
  }
}

TEST(GaussHermiteTest, Memoized) { EXPECT_EQ(&gauss_hermite(17), &gauss_hermite(17)); }

TEST(QuadratureSchemeTest, Budget) {
  const QuadratureScheme s{10, 1000};
  EXPECT_EQ(s.node_count(3), 1000u);
  EXPECT_THROW(s.node_count(4), BudgetError);
}

TEST(TensorExpectationTest, SeparableProduct) {
  const double v = tensor_expectation<double>({8}, 2, [](const Vector& u) { return u(0) * u(0) * u(1) * u(1); });
  EXPECT_NEAR(v, 1.0, 1e-14);
  EXPECT_THROW(tensor_expectation<double>({1}, 1, [](const Vector&) { return 1.0; }), DomainError);
}

TEST(MultiIndexTest, Basics) {
  const MultiIndex a{2, 0, 1};
  EXPECT_EQ(a.total(), 3);
  EXPECT_EQ(a.factorial(), 2.0);
  EXPECT_EQ(a.expand(), (std::vector<int>{0, 0, 2}));
  EXPECT_TRUE(MultiIndex({1, 0, 1}).le(a));
  EXPECT_FALSE(MultiIndex({0, 1, 0}).le(a));
  EXPECT_EQ(a - MultiIndex({1, 0, 0}) + MultiIndex::unit(3, 1), MultiIndex({1, 1, 1}));
}

TEST(MultiIndexTest, EnumerationCounts) {
  // C(n + d − 1, d)
  EXPECT_EQ(multi_indices_of_degree(3, 4).size(), 15u);
  EXPECT_EQ(multi_indices_of_degree(2, 0).size(), 1u);
  EXPECT_EQ(multi_indices_of_degree(4, 2).size(), 10u);
  EXPECT_EQ(multi_indices_of_degree(3, 2).front(), MultiIndex({2, 0, 0}));
}
