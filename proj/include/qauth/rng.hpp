#pragma once

#include <cstdint>

namespace qauth {

// 64-bit finalizer used for seed derivation (splitmix64 mixing function).
constexpr uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for stream `index` of a master seed. Every Monte Carlo trial
// derives its own stream from (master_seed, trial_index), so results are a
// pure function of the master seed and independent of execution order or
// thread count.
constexpr uint64_t derive_seed(uint64_t master_seed, uint64_t index) {
  uint64_t a = mix64(master_seed ^ 0x8e9c1f2bd4a46a3bULL);
  uint64_t b = mix64(index + 0xd1b54a32d192ed03ULL);
  return mix64(a ^ (b + 0x2545f4914f6cdd1dULL));
}

// splitmix64 stream. Cheap, deterministic, and statistically solid for
// simulation work; not cryptographic.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound) without modulo bias. bound must be positive.
  uint64_t next_below(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace qauth
