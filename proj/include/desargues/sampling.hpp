#pragma once

// Deterministic sampling of field elements. The bit stream depends only on
// the seed, never on the standard library's distribution implementations.

#include <cstdint>
#include <random>

#include "desargues/scalar_field.hpp"

namespace desargues {

/// splitmix64 finalizer; derives independent sub-seeds from (seed, index).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound > 0. Rejection sampling on the raw output.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform residue over GF(p); over Q a fraction n/d with |n| <= 12 and
/// 1 <= d <= 6; over an extension, independent base samples for u and v.
Scalar random_scalar(const Field& field, Rng& rng);
Scalar random_nonzero(const Field& field, Rng& rng);

}  // namespace desargues
