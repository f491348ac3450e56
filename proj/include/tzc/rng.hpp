#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace tzc {

// Deterministic PRNG used everywhere randomness is needed. Seedable from the
// CLI (--seed); root-finding seeds it from a hash of the input polynomial so
// results are reproducible run to run.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0x5eed5eed5eed5eedULL) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  uint64_t below(uint64_t bound) {  // uniform in [0, bound)
    std::uniform_int_distribution<uint64_t> d(0, bound - 1);
    return d(eng_);
  }

  // Uniform integer in [0, m). Rejection sampling on fixed-width chunks.
  mpz_class mpz_below(const mpz_class& m) {
    size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    while (true) {
      mpz_class r = 0;
      for (size_t i = 0; i < words; ++i) {
        r <<= 64;
        r += mpz_class(u64());
      }
      r >>= (words * 64 - bits);
      if (r < m) return r;
    }
  }

 private:
  std::mt19937_64 eng_;
};

inline uint64_t fnv1a(const unsigned char* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  for (size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace tzc
