#include "weylprice/multi_index.hpp"

#include "weylprice/error.hpp"

#include <numeric>

namespace weylprice {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw DomainError("multi-index entries must be nonnegative");
}

MultiIndex MultiIndex::unit(int n, int k) {
  MultiIndex out(n);
  out[k] = 1;
  return out;
}

int MultiIndex::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::uint64_t MultiIndex::factorial_int() const {
  std::uint64_t f = 1;
  for (int e : entries_)
    for (int k = 2; k <= e; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

double MultiIndex::factorial() const { return static_cast<double>(factorial_int()); }

bool MultiIndex::le(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionError("multi-index length mismatch");
  for (int k = 0; k < size(); ++k)
    if (entries_[k] > other.entries_[k]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw DimensionError("multi-index length mismatch");
  MultiIndex out(*this);
  for (int k = 0; k < size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (o.size() != size()) throw DimensionError("multi-index length mismatch");
  MultiIndex out(*this);
  for (int k = 0; k < size(); ++k) {
    out.entries_[k] -= o.entries_[k];
    if (out.entries_[k] < 0) throw DomainError("multi-index difference is negative");
  }
  return out;
}

std::vector<int> MultiIndex::expand() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    for (int r = 0; r < entries_[k]; ++r) out.push_back(k);
  return out;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int k = 0; k < size(); ++k) {
    if (k) s += ",";
    s += std::to_string(entries_[k]);
  }
  return s + ")";
}

namespace {

void fill(int n, int k, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (k == n - 1) {
    cur[k] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[k] = e;
    fill(n, k + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("multi_indices_of_degree: bad arguments");
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  fill(n, 0, d, cur, out);
  return out;
}

}  // namespace weylprice
