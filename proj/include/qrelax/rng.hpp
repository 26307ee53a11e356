#pragma once

#include <cstdint>
#include <random>

namespace qrelax {

// Deterministic random source. std::mt19937_64 is fully specified by the
// standard, and the distribution helpers below are hand-rolled so that a given
// seed produces the same draw sequence on every platform and standard library
// (std::uniform_int_distribution et al. are not bit-reproducible across
// implementations, which would break byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix(seed)) {}

  // Independent stream derived from (seed, stream index). Used to give each
  // sample / shot / run its own reproducible generator.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed) ^ mix(stream * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), rejection-sampled to avoid modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Rademacher draw: +1 or -1 with equal probability.
  int sign() { return (gen_() & 1u) ? 1 : -1; }

  // Uniform double in [lo, hi).
  double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  // splitmix64 finalizer; whitens arbitrary seeds before they reach the engine.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace qrelax
