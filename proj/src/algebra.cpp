#include "weylprice/algebra.hpp"

#include "weylprice/error.hpp"
#include "weylprice/taylor.hpp"

#include <cmath>
#include <string>

namespace weylprice {

SymMatrix theta_tilde(const AntisymMatrix& theta) {
  const int n = theta.order();
  SymMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) out.set(j, k, theta(j, k));
  return out;
}

CMatrix ComplexCovariance::hermitian() const {
  return sigma.dense().cast<Complex>() + Complex(0.0, 1.0) * theta.dense().cast<Complex>();
}

Complex WeylPolynomial::coeff(const MultiIndex& gamma) const {
  const auto it = terms_.find(gamma);
  return it == terms_.end() ? Complex{} : it->second;
}

void WeylPolynomial::add(const MultiIndex& gamma, Complex c) {
  if (gamma.size() != dim_) throw DimensionError("WeylPolynomial: monomial has wrong length");
  terms_[gamma] += c;
}

WeylPolynomial WeylPolynomial::pruned(double tol) const {
  WeylPolynomial out(dim_);
  for (const auto& [g, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace(g, c);
  return out;
}

Complex WeylPolynomial::expectation(const GaussianState& state) const {
  if (state.dim() != dim_) throw DimensionError("WeylPolynomial: state dimension differs");
  Complex s{};
  for (const auto& [g, c] : terms_) s += c * ordered_moment(g, state);
  return s;
}

namespace {

void check_cap(const MultiIndex& alpha, int n) {
  if (alpha.size() != n) throw DimensionError("multi-index length " + std::to_string(alpha.size()) +
                                              " differs from dimension " + std::to_string(n));
  if (alpha.total() > kDegreeCap)
    throw DomainError("degree " + std::to_string(alpha.total()) + " exceeds cap of 8");
}

template <class S>
S minus_i_power(int m) {
  S r = ScalarOps<S>::rational(1, 1);
  const S minus_i = -ScalarOps<S>::i_unit();
  for (int k = 0; k < m; ++k) r *= minus_i;
  return r;
}

// (−i)^{|γ|} γ! [λ^γ] exp(iλᵀμ − ½λᵀΣλ − (i/2)·phase·λᵀΘ̃λ); dense row-major inputs.
template <class S>
S moment_from_series(const MultiIndex& gamma, const std::vector<double>& mean,
                     const std::vector<double>& sigma, const std::vector<double>& theta_tilde_dense,
                     bool ordered) {
  const std::size_t n = mean.size();
  std::vector<S> mu(n), sig(n * n), tt(n * n);
  for (std::size_t j = 0; j < n; ++j) mu[j] = ScalarOps<S>::from_double(mean[j]);
  for (std::size_t k = 0; k < n * n; ++k) {
    sig[k] = ScalarOps<S>::from_double(sigma[k]);
    tt[k] = ScalarOps<S>::from_double(theta_tilde_dense[k]);
  }
  const S i = ScalarOps<S>::i_unit();
  BoxSeries<S> exponent = linear_series<S>(gamma, mu, i);
  exponent += quadratic_series<S>(gamma, sig, ScalarOps<S>::rational(-1, 2));
  if (ordered) exponent += quadratic_series<S>(gamma, tt, -(i * ScalarOps<S>::rational(1, 2)));
  S c = exponent.exp().coeff(gamma);
  c *= ScalarOps<S>::rational(static_cast<long>(gamma.factorial_int()), 1);
  return minus_i_power<S>(gamma.total()) * c;
}

struct DenseState {
  std::vector<double> mean, sigma, theta_tilde;
};

DenseState dense(const GaussianState& state) {
  const int n = state.dim();
  DenseState d;
  d.mean.assign(state.mean().data(), state.mean().data() + n);
  const SymMatrix tt = theta_tilde(state.ccr());
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      d.sigma.push_back(state.cov()(j, k));
      d.theta_tilde.push_back(tt(j, k));
    }
  return d;
}

template <class S>
S moment_of(const MultiIndex& alpha, const GaussianState& state, bool ordered) {
  check_cap(alpha, state.dim());
  require(state, ValidityMode::quantum);
  const DenseState d = dense(state);
  return moment_from_series<S>(alpha, d.mean, d.sigma, d.theta_tilde, ordered);
}

// Recursive pair-partition enumeration over factor positions.
template <class S>
S wick_rec(const std::vector<int>& vars, std::vector<bool>& used, const std::vector<S>& mu,
           const std::vector<S>& pair) {
  const std::size_t m = vars.size();
  std::size_t a = 0;
  while (a < m && used[a]) ++a;
  if (a == m) return ScalarOps<S>::rational(1, 1);
  const std::size_t n = mu.size();
  used[a] = true;
  S total = mu[vars[a]] * wick_rec(vars, used, mu, pair);
  for (std::size_t b = a + 1; b < m; ++b) {
    if (used[b]) continue;
    used[b] = true;
    total += pair[vars[a] * n + vars[b]] * wick_rec(vars, used, mu, pair);
    used[b] = false;
  }
  used[a] = false;
  return total;
}

template <class S>
S wick_impl(const MultiIndex& alpha, const Vector& mean, const ComplexCovariance& cov,
            WickOrdering ordering) {
  const int n = static_cast<int>(mean.size());
  if (cov.order() != n || cov.theta.order() != n) throw DimensionError("wick_oracle: size mismatch");
  check_cap(alpha, n);
  std::vector<S> mu(n), pair(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) mu[j] = ScalarOps<S>::from_double(mean(j));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      pair[j * n + k] = ScalarOps<S>::from_double(
          cov.sigma(j, k), ordering == WickOrdering::ordered ? cov.theta(j, k) : 0.0);
  const std::vector<int> vars = alpha.expand();
  std::vector<bool> used(vars.size(), false);
  return wick_rec<S>(vars, used, mu, pair);
}

}  // namespace

Complex weyl_symmetrized_moment(const MultiIndex& alpha, const GaussianState& state) {
  return moment_of<Complex>(alpha, state, false);
}

ExactComplex weyl_symmetrized_moment_exact(const MultiIndex& alpha, const GaussianState& state) {
  return moment_of<ExactComplex>(alpha, state, false);
}

Complex ordered_moment(const MultiIndex& gamma, const GaussianState& state) {
  return moment_of<Complex>(gamma, state, true);
}

ExactComplex ordered_moment_exact(const MultiIndex& gamma, const GaussianState& state) {
  return moment_of<ExactComplex>(gamma, state, true);
}

ExactComplex word_moment_exact(const std::vector<int>& word, const GaussianState& state) {
  const int m = static_cast<int>(word.size());
  if (m > kDegreeCap) throw DomainError("word length exceeds cap of 8");
  require(state, ValidityMode::quantum);
  if (m == 0) return ExactComplex(1);
  for (int w : word)
    if (w < 0 || w >= state.dim()) throw DimensionError("word refers to a missing variable");
  DenseState d;
  for (int t = 0; t < m; ++t) {
    d.mean.push_back(state.mean()(word[t]));
    for (int s = 0; s < m; ++s) {
      d.sigma.push_back(state.cov()(word[t], word[s]));
      // Θ̃ of the lifted variables: θ between positions t < s, mirrored.
      const int lo = std::min(t, s), hi = std::max(t, s);
      d.theta_tilde.push_back(t == s ? 0.0 : state.ccr()(word[lo], word[hi]));
    }
  }
  MultiIndex ones(std::vector<int>(static_cast<std::size_t>(m), 1));
  return moment_from_series<ExactComplex>(ones, d.mean, d.sigma, d.theta_tilde, true);
}

WeylPolynomial weyl_derivative_at_zero(const MultiIndex& alpha, const AntisymMatrix& theta) {
  using C = Complex;
  const int n = theta.order();
  check_cap(alpha, n);
  const SymMatrix tt = theta_tilde(theta);
  std::vector<C> tt_dense(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) tt_dense[j * n + k] = tt(j, k);
  const BoxSeries<C> phase = quadratic_series<C>(alpha, tt_dense, C(0.0, 0.5)).exp();
  WeylPolynomial out(n);
  const double alpha_fact = alpha.factorial();
  // Enumerate γ ≤ α.
  MultiIndex gamma(n);
  while (true) {
    const MultiIndex rest = alpha - gamma;
    C i_pow = 1.0;
    for (int k = 0; k < gamma.total(); ++k) i_pow *= C(0.0, 1.0);
    // α!/(γ!(α−γ)!) · ∂^{α−γ}phase(0) = α!/γ! · [λ^{α−γ}]phase.
    const C c = alpha_fact / gamma.factorial() * i_pow * phase.coeff(rest);
    if (c != C{}) out.add(gamma, c);
    int k = n - 1;
    while (k >= 0 && gamma[k] == alpha[k]) gamma[k--] = 0;
    if (k < 0) break;
    ++gamma[k];
  }
  return out;
}

WeylPolynomial quantize_delta_symbol(const std::map<MultiIndex, Complex>& symbol,
                                     const AntisymMatrix& theta) {
  WeylPolynomial out(theta.order());
  // ⟨∂^α δ, φ⟩ = (−1)^{|α|} ∂^α φ(0) with φ(λ) = e^{iλᵀX}.
  for (const auto& [alpha, c] : symbol) {
    const double sign = alpha.total() % 2 == 0 ? 1.0 : -1.0;
    const WeylPolynomial d_alpha = weyl_derivative_at_zero(alpha, theta);
    for (const auto& [gamma, d] : d_alpha.terms()) out.add(gamma, sign * c * d);
  }
  return out.pruned();
}

WeylPolynomial quantize_quadratic(const QuadraticForm& qf, const AntisymMatrix& theta) {
  const int n = qf.dim();
  if (theta.order() != n || qf.quadratic.order() != n)
    throw DimensionError("quantize_quadratic: size mismatch");
  // F(λ) = i Σⱼ βⱼ ∂ⱼδ − ½ Σⱼₖ rⱼₖ ∂ⱼ∂ₖδ.
  std::map<MultiIndex, Complex> symbol;
  for (int j = 0; j < n; ++j) {
    if (qf.linear(j) != 0.0) symbol[MultiIndex::unit(n, j)] += Complex(0.0, qf.linear(j));
    for (int k = 0; k < n; ++k) {
      const double r = qf.quadratic(j, k);
      if (r != 0.0) symbol[MultiIndex::unit(n, j) + MultiIndex::unit(n, k)] += -0.5 * r;
    }
  }
  return quantize_delta_symbol(symbol, theta);
}

std::string_view to_string(WickOrdering ordering) {
  return ordering == WickOrdering::ordered ? "ordered" : "symmetrized";
}

WickOrdering parse_wick_ordering(std::string_view name) {
  if (name == "ordered") return WickOrdering::ordered;
  if (name == "symmetrized") return WickOrdering::symmetrized;
  throw InputError("unknown ordering '" + std::string(name) + "'");
}

Complex wick_oracle(const MultiIndex& alpha, const Vector& mean, const ComplexCovariance& cov,
                    WickOrdering ordering) {
  return wick_impl<Complex>(alpha, mean, cov, ordering);
}

ExactComplex wick_oracle_exact(const MultiIndex& alpha, const Vector& mean,
                               const ComplexCovariance& cov, WickOrdering ordering) {
  return wick_impl<ExactComplex>(alpha, mean, cov, ordering);
}

}  // namespace weylprice
