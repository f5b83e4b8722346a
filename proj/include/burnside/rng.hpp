#pragma once

#include <cstdint>

namespace burnside {

// Deterministic generator for seeded sampling. Avoids std::uniform_int_distribution,
// whose output is implementation-defined; results must match across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        // xorshift* variant
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    int range(int lo, int hi) { return lo + (int)below((uint64_t)(hi - lo + 1)); }

  private:
    uint64_t state_;
};

}  // namespace burnside
