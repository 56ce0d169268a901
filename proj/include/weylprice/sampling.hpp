#pragma once

#include "weylprice/gaussian.hpp"
#include "weylprice/rng.hpp"

namespace weylprice {

/// Random problem generators driven by the counter-based stream, so a seed
/// reproduces the same problems on every platform.

Vector random_vector(RngStream& rng, int n, double scale = 1.0);

/// BBᵀ/n + floor·I with standard normal B.
SymMatrix random_spd(RngStream& rng, int n, double floor = 0.3);

/// Θ with independent entries θⱼₖ ~ U(−scale, scale) above the diagonal.
AntisymMatrix random_antisym(RngStream& rng, int n, double scale = 0.5);

/// Classical state: μ ~ N(0, 0.5²I), Σ = random_spd.
GaussianState random_classical_state(RngStream& rng, int n);

/// Σ = BBᵀ/n + (‖Θ‖₂ + margin)I, which makes Σ + iΘ ≻ 0 with gap ≥ margin.
GaussianState random_quantum_state(RngStream& rng, const AntisymMatrix& ccr, double margin = 0.1);

/// Spectral norm of Θ.
double spectral_norm(const AntisymMatrix& theta);

}  // namespace weylprice
