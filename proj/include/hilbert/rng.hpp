#pragma once

#include <cstdint>

#include "hilbert/rational.hpp"

namespace hilbert {

// Counter-based deterministic generator: output i is a pure function of
// (seed, stream, i), so shards can be handed (seed, shard-index) pairs and
// reproduce their slice independently of scheduling. The mixer is the
// SplitMix64 finalizer.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

  uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ull); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  // Uniform dyadic rational k / 2^bits in [0, 1); exact-arithmetic sampling.
  Rat next_rat(unsigned bits = 20) {
    uint64_t k = next_u64() >> (64 - bits);
    Rat r(static_cast<unsigned long>(k), 1ul << bits);
    r.canonicalize();
    return r;
  }

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace hilbert
