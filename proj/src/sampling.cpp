#include "weylprice/sampling.hpp"

namespace weylprice {

Vector random_vector(RngStream& rng, int n, double scale) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = scale * rng.normal();
  return v;
}

SymMatrix random_spd(RngStream& rng, int n, double floor) {
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) b(i, k) = rng.normal();
  return SymMatrix::symmetric_part(b * b.transpose() / n + floor * Matrix::Identity(n, n));
}

AntisymMatrix random_antisym(RngStream& rng, int n, double scale) {
  AntisymMatrix t(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) t.set(i, k, rng.uniform(-scale, scale));
  return t;
}

GaussianState random_classical_state(RngStream& rng, int n) {
  Vector mu = random_vector(rng, n, 0.5);
  return {std::move(mu), random_spd(rng, n)};
}

double spectral_norm(const AntisymMatrix& theta) {
  if (theta.order() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(theta.dense()).singularValues()(0);
}

GaussianState random_quantum_state(RngStream& rng, const AntisymMatrix& ccr, double margin) {
  const int n = ccr.order();
  Vector mu = random_vector(rng, n, 0.5);
  return {std::move(mu), random_spd(rng, n, spectral_norm(ccr) + margin), ccr};
}

}  // namespace weylprice
