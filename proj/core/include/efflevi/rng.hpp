#pragma once

#include <cstdint>

#include "efflevi/errors.hpp"

namespace efflevi {

// Deterministic splitmix64 generator. Identical sequences on every platform,
// which the byte-identical report requirement depends on; <random>
// distributions do not make that guarantee.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive, via rejection sampling.
  long uniform(long lo, long hi) {
    ensure(lo <= hi, "empty uniform range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(next());
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

}  // namespace efflevi
