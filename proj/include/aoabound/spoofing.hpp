#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "aoabound/errors.hpp"
#include "aoabound/rng.hpp"
#include "aoabound/ula.hpp"

namespace aoabound {

struct AttackerComponent {
  double angle = 0.0;                // radians, the component's true direction
  cplx precoding = cplx(1.0, 0.0);
};

struct AttackerConfig {
  explicit AttackerConfig(std::vector<AttackerComponent> components_)
      : components(std::move(components_)) {
    if (components.empty()) {
      throw degenerate_scenario("attacker needs at least one component");
    }
    for (const auto& c : components) {
      detail::require_angle(c.angle, "attacker component");
    }
  }

  std::vector<AttackerComponent> components;

  int count() const { return static_cast<int>(components.size()); }

  double total_power() const {
    double p = 0.0;
    for (const auto& c : components) p += std::norm(c.precoding);
    return p;
  }

  double precoding_l1() const {
    double s = 0.0;
    for (const auto& c : components) s += std::abs(c.precoding);
    return s;
  }
};

// Mean of the received signal under attack: sum_l q_l a(angle_l).
inline std::vector<cplx> spoofed_mean(const ArrayGeometry& geometry,
                                      const AttackerConfig& attacker) {
  std::vector<cplx> mean(geometry.num_elements, cplx(0.0, 0.0));
  for (const auto& c : attacker.components) {
    const SteeringVector a = steering(geometry, c.angle);
    for (int m = 0; m < geometry.num_elements; ++m) {
      mean[m] += c.precoding * a.elements[m];
    }
  }
  return mean;
}

struct MismatchVector {
  std::vector<cplx> delta;
  double evaluated_at = 0.0;
};

// delta = spoofed mean - steering(theta), elementwise.
inline MismatchVector mismatch_vector(const ArrayGeometry& geometry,
                                      const AttackerConfig& attacker,
                                      double theta) {
  MismatchVector mv;
  mv.evaluated_at = theta;
  mv.delta = spoofed_mean(geometry, attacker);
  const SteeringVector a = steering(geometry, theta);
  for (int m = 0; m < geometry.num_elements; ++m) {
    mv.delta[m] -= a.elements[m];
  }
  return mv;
}

// q_l = (1/sqrt(L)) exp(j phi_l), phi_l iid uniform on [0, 2pi).
// Deterministic for a given seed; total power is exactly one up to rounding.
inline std::vector<cplx> random_phase_precoding(int count, std::uint64_t seed) {
  if (count < 1) {
    throw degenerate_scenario("precoding needs at least one component");
  }
  SplitMix64 rng(seed);
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(count));
  std::vector<cplx> q(count);
  for (int l = 0; l < count; ++l) {
    q[l] = std::polar(magnitude, rng.next_uniform(0.0, 2.0 * kPi));
  }
  return q;
}

namespace detail {
inline std::vector<cplx> component_spectral_sums(const ArrayGeometry& geometry,
                                                 double theta,
                                                 const std::vector<double>& angles) {
  require_angle(theta, "worst_case_precoding");
  const double kappa = geometry.wavenumber();
  const double sin_theta = std::sin(theta);
  std::vector<cplx> sums(angles.size());
  for (std::size_t l = 0; l < angles.size(); ++l) {
    require_angle(angles[l], "worst_case_precoding");
    const cplx r = std::polar(1.0, kappa * (std::sin(angles[l]) - sin_theta));
    sums[l] = weighted_geometric_sum(geometry.num_elements, r);
  }
  return sums;
}
}  // namespace detail

// Phase-only worst case under fixed magnitudes |q_l| = 1/sqrt(L): each phase
// phi_l = pi/2 - arg(S_M(r_l)) rotates q_l S_M(r_l) onto +j|S_M(r_l)|/sqrt(L),
// so the imaginary parts accumulate coherently to (1/sqrt(L)) sum_l |S_M(r_l)|.
// A component with S_M(r_l) = 0 cannot contribute; its phase is set to 0.
inline std::vector<cplx> worst_case_precoding(const ArrayGeometry& geometry,
                                              double theta,
                                              const std::vector<double>& angles) {
  if (angles.empty()) {
    throw degenerate_scenario("precoding needs at least one component");
  }
  const auto sums = detail::component_spectral_sums(geometry, theta, angles);
  const double magnitude = 1.0 / std::sqrt(static_cast<double>(angles.size()));
  std::vector<cplx> q(angles.size());
  for (std::size_t l = 0; l < angles.size(); ++l) {
    const double phase = sums[l] == cplx(0.0, 0.0)
                             ? 0.0
                             : kPi / 2 - std::arg(sums[l]);
    q[l] = std::polar(magnitude, phase);
  }
  return q;
}

// Worst case over the full power ball sum |q_l|^2 <= 1: same phases, but
// magnitudes proportional to |S_M(r_l)| (Cauchy-Schwarz optimum). Falls back
// to uniform magnitudes when every S_M(r_l) vanishes.
inline std::vector<cplx> worst_case_unconstrained_magnitudes(
    const ArrayGeometry& geometry, double theta,
    const std::vector<double>& angles) {
  if (angles.empty()) {
    throw degenerate_scenario("precoding needs at least one component");
  }
  const auto sums = detail::component_spectral_sums(geometry, theta, angles);
  double norm_sq = 0.0;
  for (const cplx& s : sums) norm_sq += std::norm(s);
  const double norm = std::sqrt(norm_sq);
  std::vector<cplx> q(angles.size());
  const double uniform = 1.0 / std::sqrt(static_cast<double>(angles.size()));
  for (std::size_t l = 0; l < angles.size(); ++l) {
    const double phase = sums[l] == cplx(0.0, 0.0)
                             ? 0.0
                             : kPi / 2 - std::arg(sums[l]);
    const double magnitude = norm > 0.0 ? std::abs(sums[l]) / norm : uniform;
    q[l] = std::polar(magnitude, phase);
  }
  return q;
}

// Convenience: attacker with the given angles and precoding values.
inline AttackerConfig make_attacker(const std::vector<double>& angles,
                                    const std::vector<cplx>& precoding) {
  if (angles.size() != precoding.size()) {
    throw degenerate_scenario("attacker angle and precoding counts differ");
  }
  std::vector<AttackerComponent> components(angles.size());
  for (std::size_t l = 0; l < angles.size(); ++l) {
    components[l] = {angles[l], precoding[l]};
  }
  return AttackerConfig(std::move(components));
}

}  // namespace aoabound
