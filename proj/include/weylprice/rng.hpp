#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace weylprice {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so sample i of a Monte Carlo run is the same no
/// matter how the run is split across workers.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  /// Independent child generator.
  CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

  std::uint64_t bits(std::uint64_t counter) const { return mix(key_ + mix(counter)); }

  /// Uniform on the open interval (0, 1).
  double uniform(std::uint64_t counter) const {
    return (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  /// Standard normal draw number `counter` (Box–Muller on two derived uniforms).
  double normal(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

/// Sequential convenience wrapper around CounterRng.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) : rng_(seed, stream) {}

  double uniform() { return rng_.uniform(counter_++); }
  double uniform(double lo, double hi) { return rng_.uniform(counter_++, lo, hi); }
  double normal() { return rng_.normal(counter_++); }
  int integer(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(rng_.bits(counter_++) % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace weylprice
