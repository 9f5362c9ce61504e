#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "restore/types.hpp"

namespace restore {

/// SplitMix64 step, used for seed derivation only.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives the seed of sub-stream `stream` from a master seed. All randomness
/// in a run flows from one master seed; replicas, pilot chains and diagnostics
/// take distinct streams so adding one never perturbs another.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64_next(s);
  s ^= stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
  std::uint64_t b = splitmix64_next(s);
  return a ^ (b + 0x9e3779b97f4a7c15ULL);
}

/// Seeded random stream. Uniforms come from the top 53 bits of a mt19937_64
/// draw; normals use Box-Muller with a cached spare, so the consumption
/// pattern is deterministic and runs are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(derive_seed(seed, stream)) {}

  /// Uniform on [0,1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0,1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  /// Standard normal.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double theta = 6.283185307179586477 * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  Vector normal_vector(int dim) {
    Vector z(dim);
    for (int i = 0; i < dim; ++i) z[i] = normal();
    return z;
  }

  /// Exponential with the given rate (mean 1/rate).
  double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

  /// Uniform index in [0, n).
  std::int64_t uniform_index(std::int64_t n) {
    auto idx = static_cast<std::int64_t>(uniform() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace restore
