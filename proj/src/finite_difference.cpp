#include "weylprice/finite_difference.hpp"

#include "weylprice/error.hpp"

namespace weylprice {

Vector fd_gradient(const std::function<double(const Vector&)>& fn, const Vector& x, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  Vector g(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vector up = x, down = x;
    up(j) += h;
    down(j) -= h;
    g(j) = (fn(up) - fn(down)) / (2.0 * h);
  }
  return g;
}

SymMatrix fd_hessian(const std::function<double(const Vector&)>& fn, const Vector& x, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const int n = static_cast<int>(x.size());
  SymMatrix out(n);
  const double center = fn(x);
  for (int j = 0; j < n; ++j) {
    Vector up = x, down = x;
    up(j) += h;
    down(j) -= h;
    out.set(j, j, (fn(up) - 2.0 * center + fn(down)) / (h * h));
    for (int k = j + 1; k < n; ++k) {
      Vector pp = x, pm = x, mp = x, mm = x;
      pp(j) += h, pp(k) += h;
      pm(j) += h, pm(k) -= h;
      mp(j) -= h, mp(k) += h;
      mm(j) -= h, mm(k) -= h;
      out.set(j, k, (fn(pp) - fn(pm) - fn(mp) + fn(mm)) / (4.0 * h * h));
    }
  }
  return out;
}

SymMatrix fd_frechet(const std::function<double(const SymMatrix&)>& fn, const SymMatrix& at, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  const int n = at.order();
  SymMatrix out(n);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      SymMatrix d(n);
      d.set(j, k, h);
      const double diff = fn(at + d) - fn(at - d);
      // Off the diagonal the perturbation touches two entries of Σ.
      out.set(j, k, diff / (j == k ? 2.0 * h : 4.0 * h));
    }
  return out;
}

double max_norm(const Vector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

double max_norm(const SymMatrix& m) { return m.max_abs(); }

}  // namespace weylprice
