#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace mb {

// splitmix64 finalizer. Used to turn structured indices into well-spread
// seed material.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-style derivation of a child seed from (base, index). Chaining calls
// gives every (parameter, strategy, game) cell its own stream independent of
// scheduling order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix64(base + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// Deterministic generator. Wraps std::mt19937_64 (bit-exact across platforms
// per the standard) and avoids std::*_distribution, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection sampling keeps it exactly uniform.
  std::uint32_t below(std::uint32_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return static_cast<std::uint32_t>(r % n);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mb
