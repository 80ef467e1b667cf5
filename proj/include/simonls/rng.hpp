#pragma once

#include <cstdint>
#include <random>

namespace simonls {

// "SIMON" in ASCII.
inline constexpr uint64_t kDefaultSeed = 0x53494D4F4EULL;

constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-task seed stream: seed_i = master xor hash(i).
constexpr uint64_t split_seed(uint64_t master, uint64_t index) { return master ^ splitmix64(index); }

// Thin wrapper over mt19937_64 with explicit, library-independent reductions so
// that draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(splitmix64(seed)) {}

  uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be nonzero.
  uint64_t below(uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  bool bit() { return (next() >> 63) != 0; }

  // Uniform n-bit word.
  uint64_t bits(unsigned n) { return n == 0 ? 0 : next() >> (64 - n); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace simonls
