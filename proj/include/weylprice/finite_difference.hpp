#pragma once

#include "weylprice/linalg.hpp"

#include <functional>

namespace weylprice {

/// Central-difference gradient of a scalar function of a vector.
Vector fd_gradient(const std::function<double(const Vector&)>& fn, const Vector& x, double h);

/// Central-difference Hessian: three-point rule on the diagonal, four-point
/// cross rule off it.
SymMatrix fd_hessian(const std::function<double(const Vector&)>& fn, const Vector& x, double h);

/// Frechet derivative G (δg = ⟨G, δΣ⟩) of a scalar function of a symmetric
/// matrix, from central differences along eⱼeⱼᵀ and eⱼeₖᵀ + eₖeⱼᵀ.
SymMatrix fd_frechet(const std::function<double(const SymMatrix&)>& fn, const SymMatrix& at, double h);

/// Largest absolute entry.
double max_norm(const Vector& v);
double max_norm(const SymMatrix& m);

}  // namespace weylprice
