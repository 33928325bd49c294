#pragma once

// Reproducible random streams for simulation.
//
// Uniforms come from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Distribution objects from <random> are implementation
// defined, so the conversions to uniform and normal variates live here:
//   uniform: top 53 bits of one draw, scaled by 2^-53, mapped to (0, 1)
//   normal:  Marsaglia polar method, caching the second variate
// Replication seeds are derived with the SplitMix64 finalizer, which is a
// bijection on 64-bit words.

#include <cmath>
#include <cstdint>
#include <random>

namespace cointkit {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed for replication `index` of a run seeded with `base`. Distinct
/// indices always map to distinct seeds.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64_mix(base ^ splitmix64_mix(index));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform() {
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace cointkit
