#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weylprice {

/// Nonnegative integer vector α indexing derivatives ∂^α and ordered
/// monomials X^α = X₁^{α₁}⋯Xₙ^{αₙ}.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : entries_(static_cast<std::size_t>(n), 0) {}
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex unit(int n, int k);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  int& operator[](int k) { return entries_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// |α|
  int total() const;
  /// α! as a double (exact for the capped degrees used here).
  double factorial() const;
  std::uint64_t factorial_int() const;
  /// Entrywise γ ≤ α.
  bool le(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;

  /// Variable indices in ascending order, each repeated αₖ times: (2,0,1) → [0,0,2].
  std::vector<int> expand() const;

  std::string str() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// All multi-indices of length n with total degree exactly d, largest leading entry first.
std::vector<MultiIndex> multi_indices_of_degree(int n, int d);

}  // namespace weylprice
