// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace sdb {

// Self-contained counter-free PRNG (splitmix64 core) so that seeded results
// are identical across compilers and standard libraries. All stochastic
// operations in the toolkit draw from this generator, never from <random>
// distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n); n must be > 0. Modulo bias is negligible for
  // the small ranges used here (strides, layer counts, window corners).
  std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via Box-Muller. No spare caching: deterministic draw
  // count per call keeps keyed streams independent of call history.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and stream keys.
// Used to key per-(dataset, offset, epoch) draws so sample construction is
// order-independent.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t key) {
  std::uint64_t z = base ^ (key + 0x9e3779b97f4a7c15ULL + (base << 6) + (base >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k1, std::uint64_t k2) {
  return derive_seed(derive_seed(base, k1), k2);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k1, std::uint64_t k2,
                                 std::uint64_t k3) {
  return derive_seed(derive_seed(base, k1, k2), k3);
}

}  // namespace sdb
