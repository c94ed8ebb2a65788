#pragma once

// Seeded linear-congruential stream. Every sampling path in the toolkit
// draws from this generator so certificates reproduce bit-for-bit from the
// recorded seed; fixed-width arithmetic keeps it platform independent.

#include <cstdint>

namespace goodrep {

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ull + 1) {}

  uint64_t next() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_ >> 16;
  }

  // Uniform-ish draw in [0, n); determinism matters here, bias does not.
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  // Small signed integer in [-bound, bound], for characteristic-0 sampling.
  int64_t small_int(int64_t bound) {
    return static_cast<int64_t>(below(2 * bound + 1)) - bound;
  }

 private:
  uint64_t state_;
};

}  // namespace goodrep
