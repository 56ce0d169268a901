#pragma once

#include "weylprice/error.hpp"
#include "weylprice/exact.hpp"
#include "weylprice/multi_index.hpp"

#include <cstddef>
#include <vector>

namespace weylprice {

/// Multivariate polynomial truncated to the box {γ : γ ≤ cap}. Products drop
/// every monomial outside the box, so the coefficient of λ^cap in a product
/// (or an exponential) is exact. Used to read off ∂^α at zero as α!·[λ^α].
template <class S>
class BoxSeries {
 public:
  explicit BoxSeries(MultiIndex cap) : cap_(std::move(cap)), coeffs_(box_size(cap_), S{}) {}

  const MultiIndex& cap() const { return cap_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of λ^γ; zero outside the box.
  S coeff(const MultiIndex& gamma) const {
    if (!gamma.le(cap_)) return S{};
    return coeffs_[flat(gamma)];
  }
  void add_term(const MultiIndex& gamma, const S& value) {
    if (gamma.le(cap_)) coeffs_[flat(gamma)] += value;
  }

  BoxSeries& operator+=(const BoxSeries& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  BoxSeries operator*(const BoxSeries& o) const {
    check(o);
    BoxSeries out(cap_);
    const std::size_t m = coeffs_.size();
    std::vector<MultiIndex> elems;
    elems.reserve(m);
    for (std::size_t a = 0; a < m; ++a) elems.push_back(unflat(a));
    for (std::size_t a = 0; a < m; ++a) {
      if (ScalarOps<S>::is_zero(coeffs_[a])) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (ScalarOps<S>::is_zero(o.coeffs_[b])) continue;
        // Mixed-radix offsets add without carry whenever the sum stays in the box.
        if (fits(elems[a], elems[b])) out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
      }
    }
    return out;
  }

  BoxSeries scaled(const S& s) const {
    BoxSeries out(*this);
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }

  /// exp(P) truncated to the box; requires P(0) = 0.
  BoxSeries exp() const {
    if (!ScalarOps<S>::is_zero(coeffs_[0])) throw DomainError("BoxSeries::exp needs a zero constant term");
    BoxSeries result(cap_);
    result.coeffs_[0] = ScalarOps<S>::rational(1, 1);
    BoxSeries power = result;
    // P^k vanishes in the box once k exceeds the total cap degree.
    for (int k = 1; k <= cap_.total(); ++k) {
      power = (power * *this).scaled(ScalarOps<S>::rational(1, k));
      result += power;
    }
    return result;
  }

 private:
  static std::size_t box_size(const MultiIndex& cap) {
    std::size_t s = 1;
    for (int k = 0; k < cap.size(); ++k) s *= static_cast<std::size_t>(cap[k] + 1);
    return s;
  }
  std::size_t flat(const MultiIndex& g) const {
    std::size_t idx = 0;
    for (int k = 0; k < cap_.size(); ++k) idx = idx * static_cast<std::size_t>(cap_[k] + 1) + g[k];
    return idx;
  }
  MultiIndex unflat(std::size_t idx) const {
    MultiIndex g(cap_.size());
    for (int k = cap_.size() - 1; k >= 0; --k) {
      const auto radix = static_cast<std::size_t>(cap_[k] + 1);
      g[k] = static_cast<int>(idx % radix);
      idx /= radix;
    }
    return g;
  }
  bool fits(const MultiIndex& a, const MultiIndex& b) const {
    for (int k = 0; k < cap_.size(); ++k)
      if (a[k] + b[k] > cap_[k]) return false;
    return true;
  }
  void check(const BoxSeries& o) const {
    if (o.cap_ != cap_) throw DimensionError("BoxSeries cap mismatch");
  }

  MultiIndex cap_;
  std::vector<S> coeffs_;
};

/// Series of the quadratic form c·Σ_{j,k} a_jk λ_j λ_k (a given densely, row-major n×n).
template <class S>
BoxSeries<S> quadratic_series(const MultiIndex& cap, const std::vector<S>& a, const S& c) {
  const int n = cap.size();
  BoxSeries<S> out(cap);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const S& v = a[static_cast<std::size_t>(j * n + k)];
      if (ScalarOps<S>::is_zero(v)) continue;
      out.add_term(MultiIndex::unit(n, j) + MultiIndex::unit(n, k), v * c);
    }
  return out;
}

/// Series of the linear form c·Σ_j b_j λ_j.
template <class S>
BoxSeries<S> linear_series(const MultiIndex& cap, const std::vector<S>& b, const S& c) {
  const int n = cap.size();
  BoxSeries<S> out(cap);
  for (int j = 0; j < n; ++j)
    if (!ScalarOps<S>::is_zero(b[static_cast<std::size_t>(j)]))
      out.add_term(MultiIndex::unit(n, j), b[static_cast<std::size_t>(j)] * c);
  return out;
}

}  // namespace weylprice
