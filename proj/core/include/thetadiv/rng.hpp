#pragma once

#include <cstdint>

namespace thetadiv {

/// splitmix64. Deterministic across platforms, unlike the <random>
/// distributions, so seeded certificate runs stay byte-identical.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Integer in [lo, hi], inclusive.
  long long range(long long lo, long long hi) {
    return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
  }

  /// Double in [0, 1).
  double real() { return (next() >> 11) * 0x1.0p-53; }

  /// Double in [lo, hi).
  double real(double lo, double hi) { return lo + (hi - lo) * real(); }

 private:
  uint64_t state_;
};

}  // namespace thetadiv
