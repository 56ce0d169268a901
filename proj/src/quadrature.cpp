#include "weylprice/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

namespace weylprice {

namespace {

GaussHermiteRule build_rule(int order) {
  // Jacobi matrix of the monic probabilists' Hermite polynomials:
  // He_{k+1} = x He_k − k He_{k−1}, off-diagonal entries √k.
  Matrix jacobi = Matrix::Zero(order, order);
  for (int k = 1; k < order; ++k) jacobi(k - 1, k) = jacobi(k, k - 1) = std::sqrt(double(k));
  Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;
  }
  // Exact symmetry of the rule about zero.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int order) {
  if (order < 1) throw DomainError("Gauss–Hermite order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussHermiteRule>(build_rule(order));
  return *slot;
}

QuadratureScheme QuadratureScheme::from_env(int order) {
  QuadratureScheme scheme;
  scheme.order = order;
  if (const char* env = std::getenv("WEYL_PRICE_QUAD_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw InputError(std::string("WEYL_PRICE_QUAD_BUDGET is not a positive integer: ") + env);
    scheme.budget = v;
  }
  return scheme;
}

std::uint64_t QuadratureScheme::node_count(int dim) const {
  if (dim < 1) throw DimensionError("quadrature dimension must be >= 1");
  std::uint64_t count = 1;
  for (int k = 0; k < dim; ++k) {
    count *= static_cast<std::uint64_t>(order);
    if (count > budget) {
      throw BudgetError("tensor rule of order " + std::to_string(order) + " in dimension " +
                        std::to_string(dim) + " exceeds node budget " + std::to_string(budget));
    }
  }
  return count;
}

}  // namespace weylprice
