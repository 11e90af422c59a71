#pragma once

#include <cstdint>

namespace longmul {

/// SplitMix64 with the standard increment and finalizer constants. One call
/// to next() advances the state by one increment and yields one 64-bit draw.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  /// The output finalizer on its own.
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Digit in [lo, hi] from the high 32 bits of one draw.
  int next_digit(int lo, int hi) noexcept {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>((next() >> 32) % span);
  }

 private:
  std::uint64_t state_;
};

/// Initial state of the stream that generates task `task_index` of shape
/// `shape_index` under `seed`:
///   s1 = mix(seed + (shape_index + 1) * gamma)
///   s2 = mix(s1   + (task_index  + 1) * gamma)
constexpr std::uint64_t task_stream_seed(std::uint64_t seed, std::uint64_t shape_index,
                                         std::uint64_t task_index) noexcept {
  const std::uint64_t s1 = SplitMix64::mix(seed + (shape_index + 1) * SplitMix64::kGamma);
  return SplitMix64::mix(s1 + (task_index + 1) * SplitMix64::kGamma);
}

}  // namespace longmul
