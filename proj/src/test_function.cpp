#include "weylprice/test_function.hpp"

#include "weylprice/error.hpp"
#include "weylprice/taylor.hpp"

#include <cmath>
#include <limits>

namespace weylprice {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace

TestFunction TestFunction::quadratic(QuadraticForm form) {
  if (form.quadratic.order() != form.dim()) throw DimensionError("quadratic form: β and R sizes differ");
  return TestFunction(Quadratic{std::move(form)});
}

TestFunction TestFunction::gaussian_exponential(SymMatrix pi) {
  if (min_eigenvalue(pi) <= kEigTol)
    throw AdmissibilityError("Π must be positive definite", min_eigenvalue(pi));
  return TestFunction(GaussianExponential{std::move(pi)});
}

TestFunction TestFunction::exponential(Vector lambda) {
  if (lambda.size() < 1) throw DimensionError("exponential: empty λ");
  return TestFunction(Exponential{std::move(lambda)});
}

TestFunction TestFunction::polynomial(int dim, std::map<MultiIndex, double> coeffs) {
  for (const auto& [index, c] : coeffs)
    if (index.size() != dim) throw DimensionError("polynomial: multi-index length differs from dim");
  return TestFunction(Polynomial{dim, std::move(coeffs)});
}

TestFunction TestFunction::callable(int dim, std::function<double(const Vector&)> fn, int smoothness,
                                    double growth_bound) {
  if (!fn) throw DomainError("callable test function is empty");
  if (smoothness < 0) throw DomainError("smoothness order must be nonnegative");
  return TestFunction(Callable{dim, std::move(fn), smoothness, growth_bound});
}

TestFunction TestFunction::constant(int dim, double value) {
  return polynomial(dim, {{MultiIndex(dim), value}});
}

TestFunction::Kind TestFunction::kind() const { return static_cast<Kind>(data_.index()); }

std::string_view TestFunction::kind_name() const {
  switch (kind()) {
    case Kind::quadratic: return "quadratic";
    case Kind::gaussian_exponential: return "gaussian_exponential";
    case Kind::exponential: return "exponential";
    case Kind::polynomial: return "polynomial";
    case Kind::callable: return "callable";
  }
  return "?";
}

int TestFunction::dim() const {
  return std::visit(overloaded{[](const Quadratic& q) { return q.form.dim(); },
                               [](const GaussianExponential& g) { return g.pi.order(); },
                               [](const Exponential& e) { return static_cast<int>(e.lambda.size()); },
                               [](const Polynomial& p) { return p.dim; },
                               [](const Callable& c) { return c.dim; }},
                    data_);
}

bool TestFunction::is_polynomial() const {
  return kind() == Kind::quadratic || kind() == Kind::polynomial;
}

int TestFunction::degree() const {
  if (const auto* q = std::get_if<Quadratic>(&data_)) return q->form.quadratic.max_abs() > 0 ? 2 : 1;
  if (const auto* p = std::get_if<Polynomial>(&data_)) {
    int d = 0;
    for (const auto& [index, c] : p->coeffs)
      if (c != 0.0) d = std::max(d, index.total());
    return d;
  }
  return -1;
}

double TestFunction::operator()(const Vector& x) const {
  if (x.size() != dim()) throw DimensionError("test function: point has wrong length");
  return std::visit(
      overloaded{[&](const Quadratic& q) { return q.form(x); },
                 [&](const GaussianExponential& g) { return std::exp(-0.5 * x.dot(g.pi.dense() * x)); },
                 [&](const Exponential& e) { return std::exp(e.lambda.dot(x)); },
                 [&](const Polynomial& p) {
                   double s = 0.0;
                   for (const auto& [index, c] : p.coeffs) {
                     double m = c;
                     for (int k = 0; k < p.dim; ++k) m *= std::pow(x(k), index[k]);
                     s += m;
                   }
                   return s;
                 },
                 [&](const Callable& c) { return c.fn(x); }},
      data_);
}

Vector TestFunction::gradient(const Vector& x) const {
  const int n = dim();
  if (x.size() != n) throw DimensionError("test function: point has wrong length");
  switch (kind()) {
    case Kind::quadratic: {
      const auto& q = std::get<Quadratic>(data_).form;
      return q.linear + q.quadratic.dense() * x;
    }
    case Kind::gaussian_exponential: {
      const Matrix pi = std::get<GaussianExponential>(data_).pi.dense();
      return -(*this)(x) * (pi * x);
    }
    case Kind::exponential:
      return (*this)(x) * std::get<Exponential>(data_).lambda;
    default: {
      Vector g(n);
      for (int k = 0; k < n; ++k) g(k) = partial(x, MultiIndex::unit(n, k));
      return g;
    }
  }
}

Matrix TestFunction::hessian(const Vector& x) const {
  const int n = dim();
  if (x.size() != n) throw DimensionError("test function: point has wrong length");
  switch (kind()) {
    case Kind::quadratic:
      return std::get<Quadratic>(data_).form.quadratic.dense();
    case Kind::gaussian_exponential: {
      const Matrix pi = std::get<GaussianExponential>(data_).pi.dense();
      const Vector w = pi * x;
      return (*this)(x) * (w * w.transpose() - pi);
    }
    case Kind::exponential: {
      const Vector& l = std::get<Exponential>(data_).lambda;
      return (*this)(x) * (l * l.transpose());
    }
    default: {
      Matrix h(n, n);
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
          h(j, k) = h(k, j) = partial(x, MultiIndex::unit(n, j) + MultiIndex::unit(n, k));
      return h;
    }
  }
}

double TestFunction::partial(const Vector& x, const MultiIndex& alpha) const {
  const int n = dim();
  if (x.size() != n || alpha.size() != n) throw DimensionError("partial: size mismatch");
  switch (kind()) {
    case Kind::quadratic: {
      const auto& q = std::get<Quadratic>(data_).form;
      const int order = alpha.total();
      if (order == 0) return q(x);
      if (order == 1) {
        int k = 0;
        while (alpha[k] == 0) ++k;
        return q.linear(k) + q.quadratic.dense().row(k).dot(x);
      }
      if (order == 2) {
        const auto idx = alpha.expand();
        return q.quadratic(idx[0], idx[1]);
      }
      return 0.0;
    }
    case Kind::exponential: {
      const Vector& l = std::get<Exponential>(data_).lambda;
      double r = (*this)(x);
      for (int k = 0; k < n; ++k) r *= std::pow(l(k), alpha[k]);
      return r;
    }
    case Kind::gaussian_exponential: {
      // f(x + δ) = f(x)·exp(−(Πx)ᵀδ − ½δᵀΠδ); ∂^α f(x) = α!·f(x)·[δ^α] of the exponential.
      using C = std::complex<double>;
      const Matrix pi = std::get<GaussianExponential>(data_).pi.dense();
      const Vector w = pi * x;
      std::vector<C> lin(static_cast<std::size_t>(n)), quad(static_cast<std::size_t>(n * n));
      for (int j = 0; j < n; ++j) {
        lin[j] = w(j);
        for (int k = 0; k < n; ++k) quad[j * n + k] = pi(j, k);
      }
      BoxSeries<C> exponent = linear_series<C>(alpha, lin, C(-1.0));
      exponent += quadratic_series<C>(alpha, quad, C(-0.5));
      return (*this)(x) * alpha.factorial() * exponent.exp().coeff(alpha).real();
    }
    case Kind::polynomial: {
      const auto& p = std::get<Polynomial>(data_);
      double s = 0.0;
      for (const auto& [index, c] : p.coeffs) {
        if (!alpha.le(index)) continue;
        double m = c;
        for (int k = 0; k < n; ++k) m *= falling(index[k], alpha[k]) * std::pow(x(k), index[k] - alpha[k]);
        s += m;
      }
      return s;
    }
    case Kind::callable:
      return fd_partial(x, alpha);
  }
  return 0.0;
}

double TestFunction::fd_partial(const Vector& x, const MultiIndex& alpha) const {
  const auto& c = std::get<Callable>(data_);
  const int order = alpha.total();
  if (order > c.smoothness)
    throw DomainError("callable declares smoothness " + std::to_string(c.smoothness) +
                      " but derivative of order " + std::to_string(order) + " was requested");
  if (order == 0) return c.fn(x);
  // Peel one derivative off the first nonzero axis and recurse with a central
  // difference; step scaled for the remaining order.
  int axis = 0;
  while (alpha[axis] == 0) ++axis;
  MultiIndex rest = alpha;
  rest[axis] -= 1;
  const double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (2.0 + order)) *
                   std::max(1.0, std::abs(x(axis)));
  Vector xp = x, xm = x;
  xp(axis) += h;
  xm(axis) -= h;
  return (fd_partial(xp, rest) - fd_partial(xm, rest)) / (2.0 * h);
}

}  // namespace weylprice
