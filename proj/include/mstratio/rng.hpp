#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mstratio {

// All randomness flows through mt19937_64 (bit-exact sequence mandated by the
// standard) seeded via splitmix64-style stream derivation. Per-trial streams
// are independent of execution order, so parallel runs replay exactly.
inline constexpr std::string_view kRngId = "mt19937_64+splitmix64-streams";

inline constexpr std::uint64_t kSeedGamma = 0x9e3779b97f4a7c15ull;

// Default seed used by the CLI whenever --seed is omitted. Never wall clock.
inline constexpr std::uint64_t kDefaultSeed = 1729;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += kSeedGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Seed for the `stream`-th independent substream of a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master + stream * kSeedGamma);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits; avoids std::uniform_real_distribution,
  // whose output is not pinned down across standard library implementations.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mstratio
