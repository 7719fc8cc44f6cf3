/**
 * @file rng.hpp
 * @brief Counter-based pseudo-random streams for reproducible parallel
 *        Monte Carlo.
 *
 * Draw j of a stream with key k is mix64(k + (j+1)*GOLDEN) — the SplitMix64
 * generator written in counter form. Streams keyed by (seed, trial_index)
 * are therefore pure values: regenerating a trial is bit-identical no matter
 * which worker runs it or in what order.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace elliptope {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  /// Stream for one Monte Carlo trial; independent across trial indices.
  static CounterStream keyed(std::uint64_t seed, std::uint64_t trial_index) {
    return CounterStream(detail::mix64(detail::mix64(seed) ^ (detail::kGolden * (trial_index + 1))));
  }

  /// Derives an independent child stream (used for per-sample/per-restart
  /// substreams).
  CounterStream substream(std::uint64_t index) const {
    return CounterStream(detail::mix64(key_ ^ detail::mix64(index + 0xD1B54A32D192ED03ULL)));
  }

  std::uint64_t next_u64() { return detail::mix64(key_ + (++counter_) * detail::kGolden); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes two draws per pair.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
    const double u2 = next_unit();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
    have_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace elliptope
