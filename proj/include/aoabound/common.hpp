#pragma once

#include <cmath>
#include <numbers>
#include <span>

namespace aoabound {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }
constexpr double rad2_to_deg2(double rad2) {
  return rad2 * (180.0 / kPi) * (180.0 / kPi);
}

// SNR convention: pilots are unit modulus, so the per-antenna signal power is
// one and SNR = 1/sigma^2, i.e. SNR_dB = -10 log10(sigma^2).
inline double snr_db_to_noise_variance(double snr_db) {
  return std::pow(10.0, -snr_db / 10.0);
}
inline double noise_variance_to_snr_db(double noise_variance) {
  return -10.0 * std::log10(noise_variance);
}

// Neumaier-compensated sum. The result depends only on element order, never
// on how the elements were produced, which keeps aggregate statistics
// independent of the worker count.
inline double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double compensation = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      compensation += (sum - t) + v;
    } else {
      compensation += (v - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

}  // namespace aoabound
