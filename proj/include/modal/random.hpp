#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace modal {

/// SplitMix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// 64-bit generator whose streams are keyed by a seed plus a tuple of integers,
/// so each replicate draws the same numbers regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> key) {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t k : key) h = mix64(h ^ mix64(k));
    return Rng(h);
  }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  std::uint64_t next() noexcept { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace modal
