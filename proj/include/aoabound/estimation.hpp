#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aoabound/bounds.hpp"
#include "aoabound/parallel.hpp"
#include "aoabound/rng.hpp"
#include "aoabound/search.hpp"

namespace aoabound {

struct Snapshot {
  std::vector<cplx> samples;
};

struct McResult {
  double mse = 0.0;             // rad^2, against the legitimate angle
  long long trials = 0;
  std::uint64_t seed = 0;
  double standard_error = 0.0;  // sample std of squared errors / sqrt(trials)
  double snr_db = 0.0;
};

// One received snapshot under the true (spoofed) model. The noise stream is
// derived from (seed, trial_index) alone, so the same pair always yields the
// same snapshot regardless of evaluation order or worker count.
inline Snapshot draw_snapshot(const Scenario& scenario,
                              std::uint64_t trial_index, std::uint64_t seed) {
  Snapshot snap;
  snap.samples = spoofed_mean(scenario.geometry, scenario.attacker);
  SplitMix64 rng(derive_stream_seed(derive_stream_seed(seed, kNoiseStreamDomain),
                                    trial_index));
  for (cplx& v : snap.samples) {
    v += rng.next_complex_normal(scenario.noise_variance);
  }
  return snap;
}

// Maximum-likelihood angle estimate under the assumed single-path model,
// i.e. the maximizer of Re{a(theta)^H x}. For repeated estimates on one
// geometry, construct a MatchedAngleSearch once and reuse it.
inline double ml_estimate(const Snapshot& snapshot,
                          const ArrayGeometry& geometry,
                          const SearchSpec& spec = {}) {
  if (static_cast<int>(snapshot.samples.size()) != geometry.num_elements) {
    throw std::invalid_argument(
        "ml_estimate: snapshot length differs from array size");
  }
  return MatchedAngleSearch(geometry, spec).best_angle(snapshot.samples);
}

// Monte-Carlo MSE of the mismatched ML estimator against the legitimate
// angle. Squared errors land in per-trial slots and are reduced by one
// compensated sequential sum, so the result is bit-identical for any worker
// count.
inline McResult run_mse(const Scenario& scenario, long long trials,
                        std::uint64_t seed, const SearchSpec& spec = {},
                        int threads = 1) {
  if (trials < 1) {
    throw std::invalid_argument("run_mse: trials must be >= 1");
  }
  const MatchedAngleSearch search(scenario.geometry, spec);
  std::vector<double> squared_errors(static_cast<std::size_t>(trials));
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    const Snapshot snap = draw_snapshot(scenario, t, seed);
    const double estimate = search.best_angle(snap.samples);
    const double err = estimate - scenario.theta;
    squared_errors[t] = err * err;
  });

  McResult result;
  result.trials = trials;
  result.seed = seed;
  result.snr_db = scenario.snr_db();
  result.mse = compensated_sum(squared_errors) / static_cast<double>(trials);
  if (trials > 1) {
    std::vector<double> centered_sq(squared_errors.size());
    for (std::size_t i = 0; i < squared_errors.size(); ++i) {
      const double d = squared_errors[i] - result.mse;
      centered_sq[i] = d * d;
    }
    const double variance =
        compensated_sum(centered_sq) / static_cast<double>(trials - 1);
    result.standard_error = std::sqrt(variance / static_cast<double>(trials));
  }
  return result;
}

}  // namespace aoabound
