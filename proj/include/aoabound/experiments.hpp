#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "aoabound/bounds.hpp"
#include "aoabound/config.hpp"
#include "aoabound/csv.hpp"
#include "aoabound/estimation.hpp"
#include "aoabound/svg.hpp"

namespace aoabound {

inline ArrayGeometry geometry_from_config(const ExperimentConfig& c) {
  try {
    return ArrayGeometry(c.elements, c.spacing_ratio);
  } catch (const degenerate_scenario& e) {
    throw config_error(std::string("geometry.elements/spacing_ratio: ") + e.what());
  }
}

// Offsets are given in degrees relative to theta. A single entry is shared
// by all components (the multi-antenna default); otherwise one entry per
// component is required.
inline std::vector<double> attacker_angles_from_config(const ExperimentConfig& c,
                                                       double theta_rad,
                                                       int count) {
  if (count < 1) throw config_error("attacker.count: must be >= 1");
  if (c.offsets_deg.empty()) throw config_error("attacker.offsets_deg: empty list");
  if (c.offsets_deg.size() != 1 &&
      c.offsets_deg.size() != static_cast<std::size_t>(count)) {
    throw config_error(
        "attacker.offsets_deg: expected 1 entry or exactly attacker.count entries");
  }
  std::vector<double> angles(count);
  for (int l = 0; l < count; ++l) {
    const double off = c.offsets_deg.size() == 1 ? c.offsets_deg[0]
                                                 : c.offsets_deg[l];
    angles[l] = theta_rad + deg_to_rad(off);
  }
  return angles;
}

// Builds the attacker per the configured strategy. realization_index selects
// the random-phase draw; deterministic given (seed, realization_index).
inline AttackerConfig build_attacker(const ExperimentConfig& c,
                                     const ArrayGeometry& geometry,
                                     double theta_rad,
                                     std::uint64_t realization_index = 0) {
  const auto angles = attacker_angles_from_config(c, theta_rad, c.attacker_count);
  std::vector<cplx> q;
  switch (c.strategy) {
    case PrecodingStrategy::explicit_values:
      if (c.precoding.empty()) {
        q.assign(angles.size(),
                 cplx(1.0 / std::sqrt(static_cast<double>(angles.size())), 0.0));
      } else if (c.precoding.size() == angles.size()) {
        q = c.precoding;
      } else {
        throw config_error(
            "attacker.precoding: expected exactly attacker.count entries");
      }
      break;
    case PrecodingStrategy::random_phase:
      q = random_phase_precoding(
          static_cast<int>(angles.size()),
          derive_stream_seed(derive_stream_seed(c.seed, kPrecodingStreamDomain),
                             realization_index));
      break;
    case PrecodingStrategy::worst_case:
      q = worst_case_precoding(geometry, theta_rad, angles);
      break;
    case PrecodingStrategy::worst_case_unconstrained_magnitudes:
      q = worst_case_unconstrained_magnitudes(geometry, theta_rad, angles);
      break;
  }
  return make_attacker(angles, q);
}

// ---- bounds sweep ----------------------------------------------------------

struct BoundsRow {
  double snr_db = 0.0;
  double sigma2 = 0.0;
  BoundReport report;
};

inline std::vector<BoundsRow> compute_bounds_sweep(const ExperimentConfig& c) {
  const ArrayGeometry geometry = geometry_from_config(c);
  const double theta = deg_to_rad(c.theta_deg);
  const AttackerConfig attacker = build_attacker(c, geometry, theta);
  std::vector<BoundsRow> rows;
  for (const double snr_db : c.snr.points()) {
    const double sigma2 = snr_db_to_noise_variance(snr_db);
    const Scenario scenario(geometry, theta, attacker, sigma2);
    rows.push_back({snr_db, sigma2, mcrb(scenario)});
  }
  return rows;
}

inline CsvWriter bounds_csv(const std::vector<BoundsRow>& rows) {
  CsvWriter csv({"snr_db", "sigma2", "gamma", "eta", "crb_rad2", "penalty_rad2",
                 "mcrb_rad2", "crb_deg2", "penalty_deg2", "mcrb_deg2"});
  for (const auto& r : rows) {
    csv.add_row({r.snr_db, r.sigma2, r.report.gamma, r.report.eta, r.report.crb,
                 r.report.penalty, r.report.mcrb, rad2_to_deg2(r.report.crb),
                 rad2_to_deg2(r.report.penalty), rad2_to_deg2(r.report.mcrb)});
  }
  return csv;
}

// ---- fig1: Monte-Carlo MSE vs SNR, offsets {0, 0.25, 0.5} deg -------------

struct Fig1Point {
  double offset_deg = 0.0;
  double snr_db = 0.0;
  double mse = 0.0;
  double crb_value = 0.0;
  double mcrb_value = 0.0;
};

inline std::vector<Fig1Point> compute_fig1(const ExperimentConfig& c,
                                           int threads) {
  static constexpr double kOffsetsDeg[] = {0.0, 0.25, 0.5};
  const ArrayGeometry geometry = geometry_from_config(c);
  const double theta = deg_to_rad(c.theta_deg);
  std::vector<Fig1Point> points;
  for (const double offset : kOffsetsDeg) {
    const AttackerConfig attacker = make_attacker(
        {theta + deg_to_rad(offset)}, {cplx(1.0, 0.0)});
    for (const double snr_db : c.snr.points()) {
      const Scenario scenario(geometry, theta, attacker,
                              snr_db_to_noise_variance(snr_db));
      const BoundReport rep = mcrb(scenario);
      const McResult mc = run_mse(scenario, c.trials, c.seed, {}, threads);
      points.push_back({offset, snr_db, mc.mse, rep.crb, rep.mcrb});
    }
  }
  return points;
}

inline CsvWriter fig1_csv(const std::vector<Fig1Point>& points) {
  CsvWriter csv({"offset_deg", "snr_db", "mse_rad2", "crb_rad2", "mcrb_rad2"});
  for (const auto& p : points) {
    csv.add_row({p.offset_deg, p.snr_db, p.mse, p.crb_value, p.mcrb_value});
  }
  return csv;
}

inline std::vector<SvgSeries> fig1_series(const std::vector<Fig1Point>& points) {
  std::vector<SvgSeries> series;
  std::vector<double> offsets;
  for (const auto& p : points) {
    if (std::find(offsets.begin(), offsets.end(), p.offset_deg) == offsets.end()) {
      offsets.push_back(p.offset_deg);
    }
  }
  for (const double off : offsets) {
    SvgSeries mse{"MSE, offset " + detail::num_label(off) + " deg", {}};
    SvgSeries bound{"MCRB, offset " + detail::num_label(off) + " deg", {}};
    for (const auto& p : points) {
      if (p.offset_deg != off) continue;
      mse.points.emplace_back(p.snr_db, p.mse);
      bound.points.emplace_back(p.snr_db, p.mcrb_value);
    }
    series.push_back(std::move(mse));
    series.push_back(std::move(bound));
  }
  SvgSeries crb_line{"CRB", {}};
  for (const auto& p : points) {
    if (p.offset_deg == offsets.front()) {
      crb_line.points.emplace_back(p.snr_db, p.crb_value);
    }
  }
  series.push_back(std::move(crb_line));
  return series;
}

// ---- fig2: mismatch penalty vs offset over element counts ------------------

struct Fig2Point {
  int elements = 0;
  double offset_deg = 0.0;
  double penalty = 0.0;
};

inline std::vector<Fig2Point> compute_fig2(const ExperimentConfig& c) {
  static constexpr int kElementCounts[] = {4, 8, 16, 32};
  const double theta = deg_to_rad(c.theta_deg);
  if (!(c.offset_step_deg > 0.0)) {
    throw config_error("sweep.offset_step_deg: must be positive");
  }
  const int steps =
      static_cast<int>(std::floor(1.0 / c.offset_step_deg + 1e-9)) + 1;
  std::vector<Fig2Point> points;
  for (const int m : kElementCounts) {
    const ArrayGeometry geometry(m, c.spacing_ratio);
    for (int i = 0; i < steps; ++i) {
      const double offset = i * c.offset_step_deg;
      const AttackerConfig attacker =
          make_attacker({theta + deg_to_rad(offset)}, {cplx(1.0, 0.0)});
      // sigma^2 is irrelevant to the penalty; any valid value works.
      const Scenario scenario(geometry, theta, attacker, 1.0);
      points.push_back({m, offset, mismatch_penalty(scenario)});
    }
  }
  return points;
}

inline CsvWriter fig2_csv(const std::vector<Fig2Point>& points) {
  CsvWriter csv({"elements", "offset_deg", "penalty_rad2"});
  for (const auto& p : points) {
    csv.add_row({static_cast<long long>(p.elements), p.offset_deg, p.penalty});
  }
  return csv;
}

inline std::vector<SvgSeries> fig2_series(const std::vector<Fig2Point>& points) {
  std::vector<SvgSeries> series;
  for (const int m : {4, 8, 16, 32}) {
    SvgSeries s{"M = " + std::to_string(m), {}};
    for (const auto& p : points) {
      if (p.elements == m) s.points.emplace_back(p.offset_deg, p.penalty);
    }
    series.push_back(std::move(s));
  }
  return series;
}

// ---- fig3: average vs worst-case MCRB over SNR, L in {2, 4} ----------------

struct Fig3Point {
  int attacker_count = 0;
  double snr_db = 0.0;
  double crb_value = 0.0;
  double mcrb_avg = 0.0;
  double mcrb_worst = 0.0;
};

inline std::vector<Fig3Point> compute_fig3(const ExperimentConfig& c) {
  static constexpr int kCounts[] = {2, 4};
  const ArrayGeometry geometry = geometry_from_config(c);
  const double theta = deg_to_rad(c.theta_deg);
  if (c.realizations < 1) {
    throw config_error("attacker.realizations: must be >= 1");
  }
  std::vector<Fig3Point> points;
  for (const int count : kCounts) {
    const auto angles = attacker_angles_from_config(c, theta, count);
    const double sigma2_any = 1.0;  // penalties do not depend on sigma^2

    double penalty_sum = 0.0;
    const std::uint64_t base =
        derive_stream_seed(c.seed, kPrecodingStreamDomain);
    for (int k = 0; k < c.realizations; ++k) {
      const auto q = random_phase_precoding(count, derive_stream_seed(base, k));
      const Scenario s(geometry, theta, make_attacker(angles, q), sigma2_any);
      penalty_sum += mismatch_penalty(s);
    }
    const double penalty_avg = penalty_sum / c.realizations;

    const auto q_worst = worst_case_precoding(geometry, theta, angles);
    const Scenario worst(geometry, theta, make_attacker(angles, q_worst),
                         sigma2_any);
    const double penalty_worst = mismatch_penalty(worst);

    for (const double snr_db : c.snr.points()) {
      const double sigma2 = snr_db_to_noise_variance(snr_db);
      const Scenario ref(geometry, theta, make_attacker(angles, q_worst), sigma2);
      const double crb_value = crb(ref);
      points.push_back({count, snr_db, crb_value, crb_value + penalty_avg,
                        crb_value + penalty_worst});
    }
  }
  return points;
}

inline CsvWriter fig3_csv(const std::vector<Fig3Point>& points) {
  CsvWriter csv({"attacker_count", "snr_db", "crb_rad2", "mcrb_avg_rad2",
                 "mcrb_worst_rad2"});
  for (const auto& p : points) {
    csv.add_row({static_cast<long long>(p.attacker_count), p.snr_db,
                 p.crb_value, p.mcrb_avg, p.mcrb_worst});
  }
  return csv;
}

inline std::vector<SvgSeries> fig3_series(const std::vector<Fig3Point>& points) {
  std::vector<SvgSeries> series;
  for (const int count : {2, 4}) {
    SvgSeries avg{"avg MCRB, L = " + std::to_string(count), {}};
    SvgSeries worst{"worst MCRB, L = " + std::to_string(count), {}};
    for (const auto& p : points) {
      if (p.attacker_count != count) continue;
      avg.points.emplace_back(p.snr_db, p.mcrb_avg);
      worst.points.emplace_back(p.snr_db, p.mcrb_worst);
    }
    series.push_back(std::move(avg));
    series.push_back(std::move(worst));
  }
  SvgSeries crb_line{"CRB", {}};
  for (const auto& p : points) {
    if (p.attacker_count == 2) crb_line.points.emplace_back(p.snr_db, p.crb_value);
  }
  series.push_back(std::move(crb_line));
  return series;
}

// ---- montecarlo: generic MSE sweep -----------------------------------------

struct MonteCarloRow {
  std::string scenario_id;
  double snr_db = 0.0;
  McResult mc;
  double crb_value = 0.0;
  double mcrb_value = 0.0;
};

inline std::vector<MonteCarloRow> compute_montecarlo(const ExperimentConfig& c,
                                                     int threads) {
  const ArrayGeometry geometry = geometry_from_config(c);
  const double theta = deg_to_rad(c.theta_deg);

  // With a single-component attacker every offset entry is its own scenario;
  // a multi-component attacker is one scenario built from the full config.
  std::vector<std::pair<std::string, AttackerConfig>> scenarios;
  if (c.attacker_count == 1 && c.offsets_deg.size() > 1) {
    for (const double off : c.offsets_deg) {
      ExperimentConfig single = c;
      single.offsets_deg = {off};
      scenarios.emplace_back("delta=" + detail::num_label(off) + "deg",
                             build_attacker(single, geometry, theta));
    }
  } else {
    std::string id = c.attacker_count == 1
                         ? "delta=" + detail::num_label(c.offsets_deg.at(0)) + "deg"
                         : "L=" + std::to_string(c.attacker_count);
    scenarios.emplace_back(std::move(id), build_attacker(c, geometry, theta));
  }

  std::vector<MonteCarloRow> rows;
  for (const auto& [id, attacker] : scenarios) {
    for (const double snr_db : c.snr.points()) {
      const Scenario scenario(geometry, theta, attacker,
                              snr_db_to_noise_variance(snr_db));
      const BoundReport rep = mcrb(scenario);
      const McResult mc = run_mse(scenario, c.trials, c.seed, {}, threads);
      rows.push_back({id, snr_db, mc, rep.crb, rep.mcrb});
    }
  }
  return rows;
}

inline CsvWriter montecarlo_csv(const std::vector<MonteCarloRow>& rows) {
  CsvWriter csv({"scenario", "snr_db", "mse_rad2", "standard_error_rad2",
                 "crb_rad2", "mcrb_rad2", "trials", "seed"});
  for (const auto& r : rows) {
    csv.add_row({r.scenario_id, r.snr_db, r.mc.mse, r.mc.standard_error,
                 r.crb_value, r.mcrb_value, r.mc.trials, r.mc.seed});
  }
  return csv;
}

}  // namespace aoabound
