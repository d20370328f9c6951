#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "aoabound/common.hpp"
#include "aoabound/errors.hpp"

namespace aoabound {

using cplx = std::complex<double>;

namespace detail {
inline void require_angle(double theta, const char* where) {
  if (!(theta >= -kPi / 2 && theta <= kPi / 2)) {
    throw invalid_angle(std::string(where) + ": angle must lie in [-pi/2, pi/2]");
  }
}
}  // namespace detail

// Uniform linear array with M elements at spacing d, carrier wavelength
// lambda. The wavenumber kappa = 2*pi*d/lambda is the per-element phase
// scale in radians per unit sin(angle).
struct ArrayGeometry {
  ArrayGeometry(int num_elements_, double spacing_ratio_)
      : num_elements(num_elements_), spacing_ratio(spacing_ratio_) {
    if (num_elements < 2) {
      throw degenerate_scenario("array needs at least two elements");
    }
    if (!(spacing_ratio > 0.0)) {
      throw degenerate_scenario("element spacing ratio d/lambda must be positive");
    }
  }

  int num_elements;
  double spacing_ratio;  // d / lambda

  double wavenumber() const { return 2.0 * kPi * spacing_ratio; }

  bool operator==(const ArrayGeometry&) const = default;
};

struct SteeringVector {
  std::vector<cplx> elements;
  double angle = 0.0;
};

// Element m carries the phase exp(-j*kappa*m*sin(theta)); element 0 is 1.
inline SteeringVector steering(const ArrayGeometry& geometry, double theta) {
  detail::require_angle(theta, "steering");
  const double phase_step = -geometry.wavenumber() * std::sin(theta);
  SteeringVector v;
  v.angle = theta;
  v.elements.resize(geometry.num_elements);
  for (int m = 0; m < geometry.num_elements; ++m) {
    v.elements[m] = std::polar(1.0, phase_step * m);
  }
  return v;
}

// d/dtheta of the steering vector: element m is
// -j*kappa*m*cos(theta)*exp(-j*kappa*m*sin(theta)).
inline std::vector<cplx> steering_derivative(const ArrayGeometry& geometry,
                                             double theta) {
  detail::require_angle(theta, "steering_derivative");
  const double kappa = geometry.wavenumber();
  const double cos_theta = std::cos(theta);
  const double phase_step = -kappa * std::sin(theta);
  std::vector<cplx> d(geometry.num_elements);
  for (int m = 0; m < geometry.num_elements; ++m) {
    d[m] = cplx(0.0, -kappa * m * cos_theta) * std::polar(1.0, phase_step * m);
  }
  return d;
}

// Squared norm of the steering derivative:
// kappa^2 cos^2(theta) (M-1) M (2M-1) / 6.
// At |theta| = pi/2 the raw (near-zero) formula value is returned; the bound
// layer is responsible for rejecting that regime.
inline double gamma(const ArrayGeometry& geometry, double theta) {
  detail::require_angle(theta, "gamma");
  const double kappa = geometry.wavenumber();
  const double c = std::cos(theta);
  const double m = geometry.num_elements;
  return kappa * kappa * c * c * (m - 1.0) * m * (2.0 * m - 1.0) / 6.0;
}

// S_M(r) = sum_{m=0}^{M-1} m r^m by direct accumulation. Exact at r = 1
// (powers of (1,0) stay (1,0)), and the reference path for all desk-scale M.
inline cplx weighted_geometric_sum_direct(int num_terms, cplx r) {
  cplx sum = 0.0;
  cplx power = 1.0;
  for (int m = 1; m < num_terms; ++m) {
    power *= r;
    sum += static_cast<double>(m) * power;
  }
  return sum;
}

// Closed form r(1 - M r^{M-1} + (M-1) r^M)/(1-r)^2. The division cancels
// catastrophically near r = 1, so for |r - 1| <= 1/M a binomial series
// around r = 1 takes over:
//   S_M(1 + d) = sum_{k>=0} [(k+1) C(M,k+2) + k C(M,k+1)] d^k,
// all-positive coefficients, terms decaying at least like 1/k! once
// M|d| <= 1. At d = 0 the series is the limit value M(M-1)/2.
inline cplx weighted_geometric_sum_closed(int num_terms, cplx r) {
  const int m = num_terms;
  if (m <= 1) return 0.0;
  const cplx d = r - 1.0;
  if (std::abs(d) * m <= 1.0) {
    double c1 = m;                      // C(M, k+1)
    double c2 = 0.5 * m * (m - 1.0);    // C(M, k+2)
    cplx sum = 0.0;
    cplx dpow = 1.0;
    for (int k = 0; k <= m && k < 64; ++k) {
      const cplx term = ((k + 1.0) * c2 + k * c1) * dpow;
      sum += term;
      if (k > 1 && std::abs(term) <= 1e-18 * std::abs(sum)) break;
      dpow *= d;
      c1 = c2;
      c2 = c2 * (m - k - 2.0) / (k + 3.0);
    }
    return sum;
  }
  const cplx r_m1 = std::pow(r, m - 1);
  const cplx r_m = r_m1 * r;
  const cplx one_minus_r = 1.0 - r;
  return r * (1.0 - static_cast<double>(m) * r_m1 + (m - 1.0) * r_m) /
         (one_minus_r * one_minus_r);
}

// Above this size the O(M) sum stops being free and the closed form takes
// over; every M exercised by the experiments stays on the direct path.
inline constexpr int kDirectSumPreferredLimit = 10000;

inline cplx weighted_geometric_sum(int num_terms, cplx r) {
  return num_terms <= kDirectSumPreferredLimit
             ? weighted_geometric_sum_direct(num_terms, r)
             : weighted_geometric_sum_closed(num_terms, r);
}

// Spectral form of <steering_derivative(theta), steering(phi)>:
// j*kappa*cos(theta) * S_M(r) with r = exp(+j*kappa*(sin(phi) - sin(theta))).
// Evaluating the inner product element by element from the steering
// definition produces the conjugate ratio instead, which flips the sign of
// the real part. All bound computations keep this single spectral
// convention.
inline cplx cross_inner_product(const ArrayGeometry& geometry, double theta,
                                double phi) {
  detail::require_angle(theta, "cross_inner_product");
  detail::require_angle(phi, "cross_inner_product");
  const double kappa = geometry.wavenumber();
  const cplx r = std::polar(1.0, kappa * (std::sin(phi) - std::sin(theta)));
  return cplx(0.0, kappa * std::cos(theta)) *
         weighted_geometric_sum(geometry.num_elements, r);
}

}  // namespace aoabound
