#pragma once

#include "weylprice/error.hpp"
#include "weylprice/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace weylprice {

/// Gauss–Hermite rule for the standard normal weight: Σ wᵢ g(zᵢ) ≈ E g(Z),
/// Z ~ N(0, 1). Exact for polynomials of degree ≤ 2·order − 1.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum to 1

  int order() const { return static_cast<int>(nodes.size()); }
};

/// Golub–Welsch construction from the probabilists' Hermite recurrence.
/// Rules are memoized per order.
const GaussHermiteRule& gauss_hermite(int order);

inline constexpr std::uint64_t kDefaultQuadBudget = 10'000'000;

struct QuadratureScheme {
  int order = 40;
  std::uint64_t budget = kDefaultQuadBudget;

  /// Reads WEYL_PRICE_QUAD_BUDGET when set.
  static QuadratureScheme from_env(int order = 40);

  /// order^dim, or throws BudgetError when it exceeds `budget`.
  std::uint64_t node_count(int dim) const;
};

namespace detail {

// Pairwise reduction over the flat node range [lo, hi); the tree shape depends
// only on the range, so results are bit-stable for a given scheme.
template <class T, class Term>
T pairwise_sum(std::uint64_t lo, std::uint64_t hi, const Term& term) {
  constexpr std::uint64_t kLeaf = 32;
  if (hi - lo <= kLeaf) {
    T acc = term(lo);
    for (std::uint64_t k = lo + 1; k < hi; ++k) acc += term(k);
    return acc;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  T left = pairwise_sum<T>(lo, mid, term);
  left += pairwise_sum<T>(mid, hi, term);
  return left;
}

}  // namespace detail

/// E g(U) for U ~ N(0, I_dim) by the tensor-product rule. `g` maps a node
/// vector u to a value of type T (double, Complex, or an Eigen vector/matrix
/// of fixed size across nodes).
template <class T, class G>
T tensor_expectation(const QuadratureScheme& scheme, int dim, const G& g) {
  if (scheme.order < 2) throw DomainError("quadrature order must be >= 2");
  const std::uint64_t count = scheme.node_count(dim);
  const GaussHermiteRule& rule = gauss_hermite(scheme.order);
  const auto order = static_cast<std::uint64_t>(scheme.order);
  auto term = [&](std::uint64_t flat) -> T {
    Vector u(dim);
    double w = 1.0;
    std::uint64_t rest = flat;
    for (int axis = dim - 1; axis >= 0; --axis) {
      const auto digit = static_cast<std::size_t>(rest % order);
      rest /= order;
      u(axis) = rule.nodes[digit];
      w *= rule.weights[digit];
    }
    T value = g(u);
    value *= w;
    return value;
  };
  return detail::pairwise_sum<T>(0, count, term);
}

}  // namespace weylprice
