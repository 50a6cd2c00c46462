#pragma once

#include <cstdint>

namespace inferfan {

// splitmix64 walk whose starting point is derived from (seed, stream).
// Distinct streams under one seed are independent for sampling purposes and
// can be consumed in parallel without coordination.
class Rng {
 public:
  Rng(uint64_t seed, uint64_t stream)
      : state_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
  }

  // Uniform in [0, n); modulo bias removed by rejection.
  uint64_t below(uint64_t n) {
    const uint64_t threshold = (0 - n) % n;
    uint64_t r = next();
    while (r < threshold) r = next();
    return r % n;
  }

  // Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  uint64_t state_;
};

}  // namespace inferfan
