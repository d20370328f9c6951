#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "aoabound/common.hpp"
#include "aoabound/ula.hpp"

namespace aoabound {

// Coarse-grid pass followed by bracketed refinement. The default coarse step
// of 0.02 degrees is far below the M = 16 mainlobe width (several degrees),
// so the grid cannot miss the global basin; refinement then pins the maximum
// to the stated tolerance.
struct SearchSpec {
  double lower = -kPi / 2;
  double upper = kPi / 2;
  double coarse_step = deg_to_rad(0.02);
  double tolerance = 1e-7;  // radians
};

// Finds the angle whose steering vector best matches a snapshot, i.e. the
// maximizer of Re{a(theta)^H x} over [lower, upper]. Grid phasors are cached
// at construction so one instance can score many snapshots cheaply; the
// object is immutable after construction and safe to share across threads.
class MatchedAngleSearch {
 public:
  explicit MatchedAngleSearch(const ArrayGeometry& geometry,
                              const SearchSpec& spec = {})
      : geometry_(geometry), spec_(spec) {
    if (!(spec_.lower < spec_.upper) || !(spec_.coarse_step > 0.0) ||
        !(spec_.tolerance > 0.0)) {
      throw std::invalid_argument("malformed search specification");
    }
    const double width = spec_.upper - spec_.lower;
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::round(width / spec_.coarse_step))) + 1;
    grid_.resize(n);
    phasors_.resize(n);
    const double kappa = geometry_.wavenumber();
    for (std::size_t i = 0; i < n; ++i) {
      grid_[i] = spec_.lower +
                 width * (static_cast<double>(i) / static_cast<double>(n - 1));
      phasors_[i] = std::polar(1.0, kappa * std::sin(grid_[i]));
    }
  }

  // Re{a(theta)^H x} = Re{sum_m x_m exp(+j*kappa*m*sin(theta))}, evaluated
  // by Horner on t = exp(j*kappa*sin(theta)).
  double objective(std::span<const cplx> samples, double theta) const {
    const cplx t = std::polar(1.0, geometry_.wavenumber() * std::sin(theta));
    return horner(samples, t);
  }

  // Ties on the coarse grid resolve to the smallest angle; if refinement
  // cannot strictly improve on the grid value (flat objective), the grid
  // point is returned.
  double best_angle(std::span<const cplx> samples) const {
    std::size_t best = 0;
    double best_value = horner(samples, phasors_[0]);
    for (std::size_t i = 1; i < grid_.size(); ++i) {
      const double v = horner(samples, phasors_[i]);
      if (v > best_value) {
        best_value = v;
        best = i;
      }
    }
    const double lo = best > 0 ? grid_[best - 1] : grid_[best];
    const double hi = best + 1 < grid_.size() ? grid_[best + 1] : grid_[best];
    if (!(lo < hi)) return grid_[best];
    const double refined = golden_section(samples, lo, hi);
    return objective(samples, refined) > best_value ? refined : grid_[best];
  }

  const std::vector<double>& grid() const { return grid_; }

 private:
  double horner(std::span<const cplx> samples, cplx t) const {
    cplx acc = samples.empty() ? cplx(0.0, 0.0) : samples.back();
    for (std::size_t m = samples.size(); m-- > 1;) {
      acc = acc * t + samples[m - 1];
    }
    return acc.real();
  }

  double golden_section(std::span<const cplx> samples, double lo,
                        double hi) const {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = objective(samples, x1);
    double f2 = objective(samples, x2);
    while (b - a > spec_.tolerance) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = objective(samples, x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = objective(samples, x1);
      }
    }
    return 0.5 * (a + b);
  }

  ArrayGeometry geometry_;
  SearchSpec spec_;
  std::vector<double> grid_;
  std::vector<cplx> phasors_;
};

}  // namespace aoabound
