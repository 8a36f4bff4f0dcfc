#ifndef LORASIM_RNG_HPP
#define LORASIM_RNG_HPP

#include <cmath>
#include <cstdint>

namespace lorasim {

// xoshiro256** seeded through splitmix64. Results are identical on every
// platform, unlike the distributions in <random>, which keeps traces and
// CSV output byte-stable across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) word = splitmix64(x);
  }

  // Distinct stream per (seed, entity, purpose) so adding a device or a
  // draw site never perturbs the draws of another.
  Rng(std::uint64_t seed, std::uint64_t entity, std::uint64_t purpose)
      : Rng(mix(mix(seed, entity + 0x9e3779b97f4a7c15ull), purpose + 1)) {}

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound >= 1, via rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  /// Exponential variate with the given rate, by inversion.
  double next_exponential(double rate) {
    return -std::log1p(-next_double()) / rate;
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b * 0xff51afd7ed558ccdull);
    return splitmix64(x);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace lorasim

#endif
