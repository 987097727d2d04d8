#pragma once

#include <cmath>
#include <cstdint>

namespace msc {

/// SplitMix64 generator. Small state, full 64-bit period, identical
/// output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform index in [0, n).
  std::uint64_t next_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_unit() * static_cast<double>(n)) % n;
  }

 private:
  std::uint64_t state_;
};

/// Child seed for stream `index` of a base seed. Streams derived from
/// distinct indices are independent for practical purposes.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  return g.next();
}

/// Deterministic N(0,1) stream: SplitMix64 uniforms fed through the
/// Marsaglia polar transform. Draw order is fixed, so a seed produces
/// the same sequence everywhere.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * gen_.next_unit() - 1.0;
      v = 2.0 * gen_.next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    has_cached_ = true;
    return u * f;
  }

 private:
  SplitMix64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace msc
