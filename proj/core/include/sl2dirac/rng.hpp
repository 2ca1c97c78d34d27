#pragma once

#include <cstdint>
#include <random>

#include "sl2dirac/rational.hpp"

namespace sl2dirac {

/// Deterministic pseudo-random source. Draws only raw engine words, never
/// standard-library distributions, so identical seeds give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(word() % span);
  }

  bool chance(int num, int den) { return uniform(1, den) <= num; }

  Rational small_rational() {
    return Rational(uniform(-3, 3), uniform(1, 3));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sl2dirac
