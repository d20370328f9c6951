#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

#include "aoabound/common.hpp"

namespace aoabound {

namespace detail {
// splitmix64 finalizer (Stafford mix13).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Independent stream seed for (seed, index). Every trial (and every precoding
// realization) owns a generator derived this way, so draws depend only on the
// pair and never on scheduling or worker count.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  return detail::mix64(seed ^ detail::mix64(index));
}

// Domain separators so noise streams and precoding realizations never share
// a stream even under equal indices.
inline constexpr std::uint64_t kNoiseStreamDomain = 0x6e6f697365ULL;
inline constexpr std::uint64_t kPrecodingStreamDomain = 0x7068617365ULL;

// splitmix64: one 64-bit word of state, platform-independent output.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // One Box-Muller pair of independent N(0, 1) draws.
  std::pair<double, double> next_normal_pair() {
    const double u1 = 1.0 - next_double();  // (0, 1], keeps the log finite
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return {radius * std::cos(2.0 * kPi * u2), radius * std::sin(2.0 * kPi * u2)};
  }

  // Circularly symmetric complex normal with E|z|^2 = variance.
  std::complex<double> next_complex_normal(double variance) {
    const auto [re, im] = next_normal_pair();
    const double scale = std::sqrt(0.5 * variance);
    return {scale * re, scale * im};
  }

 private:
  std::uint64_t state_;
};

}  // namespace aoabound
