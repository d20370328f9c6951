// aoabound: angle-of-arrival estimation bounds under spoofing attacks.
//
// Subcommands:
//   bounds      bound report (CRB / penalty / MCRB) over the SNR sweep
//   fig1        Monte-Carlo MSE vs SNR against CRB and MCRB, offsets {0, 0.25, 0.5} deg
//   fig2        mismatch penalty vs angular offset for M in {4, 8, 16, 32}
//   fig3        average and worst-case MCRB vs SNR for L in {2, 4}
//   montecarlo  generic MSE sweep for the configured scenario set
//
// Exit codes: 0 success, 2 config error, 3 degenerate scenario, 4 I/O error.

#include <CLI11.hpp>

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "aoabound/experiments.hpp"

namespace {

struct Cli {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  int threads = 0;  // 0 = all hardware threads

  std::optional<int> elements;
  std::optional<double> spacing_ratio;
  std::optional<double> theta_deg;
  std::optional<int> attacker_count;
  std::optional<std::vector<double>> offsets_deg;
  std::optional<std::string> strategy;
  std::optional<std::vector<std::string>> precoding;
  std::optional<int> realizations;
  std::optional<std::vector<double>> snr_db;
  std::optional<double> offset_step_deg;
  std::optional<long long> trials;
  std::optional<std::uint64_t> mc_seed;
};

aoabound::ExperimentConfig assemble_config(const Cli& cli) {
  using namespace aoabound;
  ExperimentConfig config;
  if (cli.config_path) config = load_config_file(*cli.config_path);
  if (cli.elements) config.elements = *cli.elements;
  if (cli.spacing_ratio) config.spacing_ratio = *cli.spacing_ratio;
  if (cli.theta_deg) config.theta_deg = *cli.theta_deg;
  if (cli.attacker_count) config.attacker_count = *cli.attacker_count;
  if (cli.offsets_deg) config.offsets_deg = *cli.offsets_deg;
  if (cli.strategy) config.strategy = parse_strategy(*cli.strategy);
  if (cli.precoding) {
    config.precoding.clear();
    for (const auto& item : *cli.precoding) {
      config.precoding.push_back(
          detail::parse_complex_value("attacker.precoding", item));
    }
  }
  if (cli.realizations) config.realizations = *cli.realizations;
  if (cli.snr_db) {
    if (cli.snr_db->size() != 3) {
      throw config_error("sweep.snr_db: expected [start, stop, step]");
    }
    config.snr = {(*cli.snr_db)[0], (*cli.snr_db)[1], (*cli.snr_db)[2]};
  }
  if (cli.offset_step_deg) config.offset_step_deg = *cli.offset_step_deg;
  if (cli.trials) config.trials = *cli.trials;
  if (cli.mc_seed) config.seed = *cli.mc_seed;
  if (cli.seed) config.seed = *cli.seed;
  return config;
}

void emit_csv(const aoabound::CsvWriter& csv, const Cli& cli) {
  if (cli.out_path) {
    csv.write_file(*cli.out_path);
  } else {
    std::cout << csv.str();
  }
}

void emit_svg(const std::vector<aoabound::SvgSeries>& series,
              const aoabound::SvgOptions& options, const Cli& cli) {
  if (cli.svg_path) aoabound::write_line_plot(*cli.svg_path, series, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angle-of-arrival estimation bounds under spoofing"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--config", cli.config_path, "Config file with dotted keys");
  app.add_option("--seed", cli.seed, "Override mc.seed");
  app.add_option("--out", cli.out_path, "CSV output path (default: stdout)");
  app.add_option("--svg", cli.svg_path, "SVG output path (figure commands)");
  app.add_option("--threads", cli.threads,
                 "Worker threads (0 = hardware concurrency)");

  app.add_option("--geometry.elements", cli.elements, "Array element count");
  app.add_option("--geometry.spacing_ratio", cli.spacing_ratio,
                 "Element spacing d/lambda");
  app.add_option("--scenario.theta_deg", cli.theta_deg,
                 "Legitimate angle, degrees");
  app.add_option("--attacker.count", cli.attacker_count,
                 "Spoofing component count L");
  app.add_option("--attacker.offsets_deg", cli.offsets_deg,
                 "Angular offsets from theta, degrees");
  app.add_option("--attacker.strategy", cli.strategy,
                 "explicit | random_phase | worst_case | "
                 "worst_case_unconstrained_magnitudes");
  app.add_option("--attacker.precoding", cli.precoding,
                 "Explicit precoding values, e.g. 0.7+0.1j");
  app.add_option("--attacker.realizations", cli.realizations,
                 "Random-phase realizations for averaging");
  app.add_option("--sweep.snr_db", cli.snr_db,
                 "SNR sweep: start stop step (dB)");
  app.add_option("--sweep.offset_step_deg", cli.offset_step_deg,
                 "Offset grid step, degrees");
  app.add_option("--mc.trials", cli.trials, "Monte-Carlo trials per point");
  app.add_option("--mc.seed", cli.mc_seed, "Monte-Carlo base seed");

  auto* cmd_bounds = app.add_subcommand("bounds", "Bound report over the SNR sweep");
  auto* cmd_fig1 = app.add_subcommand("fig1", "Monte-Carlo MSE vs SNR");
  auto* cmd_fig2 = app.add_subcommand("fig2", "Penalty vs offset over element counts");
  auto* cmd_fig3 = app.add_subcommand("fig3", "Average/worst-case MCRB vs SNR");
  auto* cmd_mc = app.add_subcommand("montecarlo", "Generic MSE sweep");
  for (auto* sub : {cmd_bounds, cmd_fig1, cmd_fig2, cmd_fig3, cmd_mc}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const aoabound::ExperimentConfig config = assemble_config(cli);
    if (cmd_bounds->parsed()) {
      emit_csv(aoabound::bounds_csv(aoabound::compute_bounds_sweep(config)), cli);
    } else if (cmd_fig1->parsed()) {
      const auto points = aoabound::compute_fig1(config, cli.threads);
      emit_csv(aoabound::fig1_csv(points), cli);
      emit_svg(aoabound::fig1_series(points),
               {"MSE vs SNR under spoofing", "SNR (dB)", "MSE (rad^2)", true},
               cli);
    } else if (cmd_fig2->parsed()) {
      const auto points = aoabound::compute_fig2(config);
      emit_csv(aoabound::fig2_csv(points), cli);
      emit_svg(aoabound::fig2_series(points),
               {"Mismatch penalty vs angular offset", "offset (deg)",
                "penalty (rad^2)", true},
               cli);
    } else if (cmd_fig3->parsed()) {
      const auto points = aoabound::compute_fig3(config);
      emit_csv(aoabound::fig3_csv(points), cli);
      emit_svg(aoabound::fig3_series(points),
               {"Average and worst-case MCRB vs SNR", "SNR (dB)",
                "MCRB (rad^2)", true},
               cli);
    } else if (cmd_mc->parsed()) {
      emit_csv(aoabound::montecarlo_csv(
                   aoabound::compute_montecarlo(config, cli.threads)),
               cli);
    }
  } catch (const aoabound::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const aoabound::degenerate_scenario& e) {
    std::cerr << "degenerate scenario: " << e.what() << "\n";
    return 3;
  } catch (const aoabound::invalid_angle& e) {
    std::cerr << "degenerate scenario: " << e.what() << "\n";
    return 3;
  } catch (const aoabound::io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
