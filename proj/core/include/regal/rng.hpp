#pragma once
// Counter-based deterministic random numbers.
//
// Every draw is a pure function of (seed, stream, counter), so Monte Carlo
// sampling partitions freely across worker threads without any shared state:
// sample i always sees the same numbers no matter how many workers run or in
// which order tasks complete.

#include <cstdint>

namespace regal {

namespace detail {
// SplitMix64 finalizer; full-avalanche 64-bit mix.
inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream)
      : key_(detail::mix64(detail::mix64(seed) ^ (stream * 0xD6E8FEB86659FD93ull + 1))) {}

  uint64_t bits(uint64_t counter) const {
    return detail::mix64(key_ ^ (counter * 0xA0761D6478BD642Full + 0x8EBC6AF09C88C6E3ull));
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01(uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi, uint64_t counter) const {
    return lo + (hi - lo) * uniform01(counter);
  }

 private:
  uint64_t key_;
};

}  // namespace regal
