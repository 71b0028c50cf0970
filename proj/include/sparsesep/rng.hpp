#pragma once

#include <cstdint>
#include <random>

namespace sparsesep {

// Deterministic PRNG for all randomized generators: std::mt19937_64 (the
// engine's output stream is fixed by the standard) with explicit value
// mappings instead of std::*_distribution, whose outputs vary across
// standard-library implementations. Given a seed, every stream is
// reproducible bit-for-bit.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi], inclusive. Rejection-sampled, bias-free.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace sparsesep
