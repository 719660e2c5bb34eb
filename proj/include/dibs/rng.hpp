#pragma once

#include <cstdint>
#include <limits>

namespace dibs {

/// Name recorded in every output header so runs can be compared.
inline constexpr const char* kRngName = "splitmix64";

/// SplitMix64 finalizer: a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed of the `index`-th independent substream derived from `seed`.
constexpr std::uint64_t substream(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed ^ mix64(index);
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Stateless draw: depends only on (key, a, b). Used where reproducibility must
/// not depend on evaluation order (e.g. per-vertex coins).
constexpr double keyed_unit(std::uint64_t key, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return to_unit(mix64(key ^ mix64(a ^ mix64(b + 0x632be59bd9b4e019ull))));
}

/// Sequential SplitMix64 stream. Satisfies UniformRandomBitGenerator, but the
/// helpers below are used instead of <random> distributions so that outputs do
/// not depend on the standard library implementation.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  constexpr double unit() noexcept { return to_unit((*this)()); }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return x % bound;
  }

  constexpr bool bernoulli(double p) noexcept { return unit() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace dibs
