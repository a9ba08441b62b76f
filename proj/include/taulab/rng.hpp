#pragma once

#include <cstdint>
#include <limits>

namespace taulab {

/// 64-bit finalizer from SplitMix64. Bijective on uint64.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Keyed hash of a (key, counter) pair; the building block of CounterRng.
constexpr std::uint64_t keyed_hash(std::uint64_t key, std::uint64_t counter) noexcept {
  return mix64(key + (counter + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Maps a hash to a double in [0, 1) with 53 bits of resolution.
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Counter-based generator: output i is keyed_hash(key, i), where the key is
/// derived from (seed, stream). Streams with different indices are
/// independent, so per-trial generators are obtained with split().
///
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream), key_(derive_key(seed, stream)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return keyed_hash(key_, counter_++); }

  /// A generator for a child stream; does not advance this one.
  [[nodiscard]] CounterRng split(std::uint64_t child) const noexcept {
    return CounterRng(mix64(key_ ^ 0x5851F42D4C957F2DULL), child);
  }

  double uniform01() noexcept { return to_unit((*this)()); }

  /// Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Lemire's nearly-divisionless method.
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  bool bernoulli(double p) noexcept { return uniform01() < p; }

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream() const noexcept { return stream_; }
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

 private:
  static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(mix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL));
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Seed for trial `index` of an experiment seeded with `base`.
constexpr std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return mix64(mix64(base) + 0x632BE59BD9B4E019ULL * (index + 1));
}

}  // namespace taulab
