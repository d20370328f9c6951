#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <utility>

#include "aoabound/common.hpp"
#include "aoabound/errors.hpp"
#include "aoabound/search.hpp"
#include "aoabound/spoofing.hpp"
#include "aoabound/ula.hpp"

namespace aoabound {

// A complete estimation problem instance: the verifier's array, the angle it
// assumes (the legitimate user's direction), the attacker actually
// transmitting, and the per-antenna noise variance.
struct Scenario {
  Scenario(ArrayGeometry geometry_, double theta_, AttackerConfig attacker_,
           double noise_variance_)
      : geometry(std::move(geometry_)),
        theta(theta_),
        attacker(std::move(attacker_)),
        noise_variance(noise_variance_) {
    if (!(std::abs(theta) < kPi / 2)) {
      throw degenerate_scenario("assumed angle must satisfy |theta| < pi/2");
    }
    if (!(noise_variance > 0.0)) {
      throw degenerate_scenario("noise variance must be positive");
    }
  }

  ArrayGeometry geometry;
  double theta;            // radians
  AttackerConfig attacker;
  double noise_variance;   // sigma^2 per antenna

  double snr_db() const { return noise_variance_to_snr_db(noise_variance); }
};

// All bound quantities for one scenario, in radians^2 where dimensioned.
struct BoundReport {
  double gamma = 0.0;     // information kernel ||da/dtheta||^2
  double eta = 0.0;       // mismatch scalar
  double crb = 0.0;       // sigma^2 / (2 gamma)
  double penalty = 0.0;   // eta^2 / gamma^2, SNR-independent
  double mcrb = 0.0;      // crb + penalty
  double j_info = 0.0;    // Fisher information 2 gamma / sigma^2
  double k_moment = 0.0;  // second moment of the score under the true model
};

// Derivative of the assumed-model log-likelihood at theta:
// (2/sigma^2) Re{ da(theta)^H (x - a(theta)) }, evaluated elementwise.
inline double score(std::span<const cplx> x, double theta,
                    const Scenario& scenario) {
  const int m_count = scenario.geometry.num_elements;
  if (static_cast<int>(x.size()) != m_count) {
    throw std::invalid_argument("score: snapshot length differs from array size");
  }
  const SteeringVector a = steering(scenario.geometry, theta);
  const std::vector<cplx> da = steering_derivative(scenario.geometry, theta);
  cplx acc(0.0, 0.0);
  for (int m = 0; m < m_count; ++m) {
    acc += std::conj(da[m]) * (x[m] - a.elements[m]);
  }
  return 2.0 / scenario.noise_variance * acc.real();
}

namespace detail {
inline double gamma_checked(const Scenario& s) {
  const double g = aoabound::gamma(s.geometry, s.theta);
  if (!(g > 0.0)) {
    throw degenerate_scenario("information kernel vanished (cos(theta) = 0)");
  }
  return g;
}

// Im{ sum_l q_l S_M(r_l) } with r_l = exp(j*kappa*(sin(angle_l)-sin(theta))).
inline double mismatch_imag_sum(const Scenario& s) {
  const double kappa = s.geometry.wavenumber();
  const double sin_theta = std::sin(s.theta);
  cplx acc(0.0, 0.0);
  for (const auto& c : s.attacker.components) {
    const cplx r = std::polar(1.0, kappa * (std::sin(c.angle) - sin_theta));
    acc += c.precoding * weighted_geometric_sum(s.geometry.num_elements, r);
  }
  return acc.imag();
}
}  // namespace detail

inline double fisher_information(const Scenario& s) {
  return 2.0 * detail::gamma_checked(s) / s.noise_variance;
}

// Mismatch scalar eta = -kappa cos(theta) Im{ sum_l q_l S_M(r_l) }, the
// spectral-convention form (see cross_inner_product for the convention).
// An attacker aligned with theta has r_l = 1 exactly, where S_M is real.
inline double eta(const Scenario& s) {
  const double kappa = s.geometry.wavenumber();
  return -kappa * std::cos(s.theta) * detail::mismatch_imag_sum(s);
}

// Contribution to eta from components aligned exactly with the assumed
// angle. S_M(1) = M(M-1)/2 is real, so only the imaginary part of the
// precoding feeds through: real-valued aligned precoding leaves eta
// untouched, while complex-valued aligned precoding does not. Reported
// separately so aligned-but-complex attacks can be flagged.
inline double aligned_eta_contribution(const Scenario& s) {
  const double m = s.geometry.num_elements;
  const double s_at_one = 0.5 * m * (m - 1.0);
  double imag_sum = 0.0;
  for (const auto& c : s.attacker.components) {
    if (c.angle == s.theta) imag_sum += c.precoding.imag() * s_at_one;
  }
  return -s.geometry.wavenumber() * std::cos(s.theta) * imag_sum;
}

// Second moment of the score under the true (spoofed) model:
// K = J + (2 eta / sigma^2)^2.
inline double k_moment(const Scenario& s) {
  const double j = fisher_information(s);
  const double mean_score = 2.0 * eta(s) / s.noise_variance;
  return j + mean_score * mean_score;
}

inline double crb(const Scenario& s) {
  return s.noise_variance / (2.0 * detail::gamma_checked(s));
}

inline double mismatch_penalty(const Scenario& s) {
  const double g = detail::gamma_checked(s);
  const double e = eta(s);
  return (e * e) / (g * g);
}

// Decomposed form: mcrb = crb + penalty. Canonical route for reports.
inline BoundReport mcrb(const Scenario& s) {
  BoundReport rep;
  rep.gamma = detail::gamma_checked(s);
  rep.eta = eta(s);
  rep.j_info = 2.0 * rep.gamma / s.noise_variance;
  const double mean_score = 2.0 * rep.eta / s.noise_variance;
  rep.k_moment = rep.j_info + mean_score * mean_score;
  rep.crb = s.noise_variance / (2.0 * rep.gamma);
  rep.penalty = (rep.eta * rep.eta) / (rep.gamma * rep.gamma);
  rep.mcrb = rep.crb + rep.penalty;
  return rep;
}

// Sandwich form J^{-1} K J^{-1}; algebraically identical to the decomposed
// form, kept as a separate arithmetic route for cross-checking.
inline double mcrb_sandwich(const Scenario& s) {
  const double j = fisher_information(s);
  return k_moment(s) / (j * j);
}

// Fully written-out form: the explicit CRB plus the explicit penalty
//   3 sigma^2 / (kappa^2 cos^2(theta) (M-1) M (2M-1))
//   + Im{sum q_l S_M(r_l)}^2 / (kappa^2 cos^2(theta) ((M-1)M(2M-1)/6)^2).
inline double mcrb_explicit(const Scenario& s) {
  const double kappa = s.geometry.wavenumber();
  const double c = std::cos(s.theta);
  const double kc2 = kappa * kappa * c * c;
  const double m = s.geometry.num_elements;
  const double pyramid = (m - 1.0) * m * (2.0 * m - 1.0);
  if (!(kc2 * pyramid > 0.0)) {
    throw degenerate_scenario("information kernel vanished (cos(theta) = 0)");
  }
  const double imag_sum = detail::mismatch_imag_sum(s);
  const double kernel_sixth = pyramid / 6.0;
  return 3.0 * s.noise_variance / (kc2 * pyramid) +
         (imag_sum * imag_sum) / (kc2 * kernel_sixth * kernel_sixth);
}

// |S_M(r)| <= M(M-1)/2 on the unit circle, which caps the penalty at
// 9 (sum_l |q_l|)^2 / (kappa^2 cos^2(theta) (2M-1)^2) for any attacker.
inline double penalty_upper_bound(const Scenario& s) {
  const double kappa = s.geometry.wavenumber();
  const double c = std::cos(s.theta);
  const double l1 = s.attacker.precoding_l1();
  const double two_m_minus_1 = 2.0 * s.geometry.num_elements - 1.0;
  return 9.0 * l1 * l1 / (kappa * kappa * c * c * two_m_minus_1 * two_m_minus_1);
}

// Angle minimizing the noiseless residual ||s - a(theta')||^2 over
// [-pi/2, pi/2]; diagnostic for interpreting high-SNR error floors. All
// bound evaluations above stay anchored at the assumed angle.
inline double pseudo_true_angle(const Scenario& s, double search_tolerance) {
  SearchSpec spec;
  spec.tolerance = search_tolerance;
  const MatchedAngleSearch search(s.geometry, spec);
  const std::vector<cplx> mean = spoofed_mean(s.geometry, s.attacker);
  return search.best_angle(mean);
}

}  // namespace aoabound
