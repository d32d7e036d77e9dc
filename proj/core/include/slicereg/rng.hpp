#ifndef SLICEREG_RNG_HPP
#define SLICEREG_RNG_HPP

#include <cstdint>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Deterministic generator for tests and verification runs: raw mt19937_64
/// draws mapped to doubles by fixed bit arithmetic, so sequences are
/// bit-identical across platforms and runs for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next_u64() {
    // xorshift* keeps the implementation self-contained and stable
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Quaternion quaternion(double lo, double hi) {
    double w = uniform(lo, hi), x = uniform(lo, hi);
    double y = uniform(lo, hi), z = uniform(lo, hi);
    return {w, x, y, z};
  }

  /// Uniformly distributed imaginary unit (direction from three uniforms,
  /// rejection-free via normalization of a cube sample away from zero).
  ImaginaryUnit unit() {
    while (true) {
      double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
      double n = x * x + y * y + z * z;
      if (n > 1e-4 && n <= 1.0) return ImaginaryUnit(Quaternion{0, x, y, z});
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace slicereg

#endif
