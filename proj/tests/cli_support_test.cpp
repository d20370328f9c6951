#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "aoabound/config.hpp"
#include "aoabound/csv.hpp"
#include "aoabound/experiments.hpp"
#include "aoabound/svg.hpp"

using namespace aoabound;

namespace {

TEST(Config, ParsesDottedKeysAndComments) {
  const std::string text =
      "# experiment setup\n"
      "geometry.elements = 32\n"
      "geometry.spacing_ratio=0.25\n"
      "scenario.theta_deg = -5.5   # off-boresight\n"
      "attacker.count = 2\n"
      "attacker.offsets_deg = [0.25, 0.75]\n"
      "attacker.strategy = worst_case\n"
      "attacker.realizations = 50\n"
      "\n"
      "sweep.snr_db = [10, 40, 10]\n"
      "sweep.offset_step_deg = 0.02\n"
      "mc.trials = 100\n"
      "mc.seed = 9001\n";
  const ExperimentConfig c = parse_config_text(text);
  EXPECT_EQ(c.elements, 32);
  EXPECT_EQ(c.spacing_ratio, 0.25);
  EXPECT_EQ(c.theta_deg, -5.5);
  EXPECT_EQ(c.attacker_count, 2);
  EXPECT_EQ(c.offsets_deg, (std::vector<double>{0.25, 0.75}));
  EXPECT_EQ(c.strategy, PrecodingStrategy::worst_case);
  EXPECT_EQ(c.realizations, 50);
  EXPECT_EQ(c.snr.points(), (std::vector<double>{10, 20, 30, 40}));
  EXPECT_EQ(c.offset_step_deg, 0.02);
  EXPECT_EQ(c.trials, 100);
  EXPECT_EQ(c.seed, 9001u);
}

TEST(Config, ErrorsNameTheOffendingKey) {
  try {
    parse_config_text("geometry.elements = lots\n");
    FAIL() << "expected config_error";
  } catch (const config_error& e) {
    EXPECT_NE(std::string(e.what()).find("geometry.elements"), std::string::npos);
  }
  try {
    parse_config_text("made.up.key = 1\n");
    FAIL() << "expected config_error";
  } catch (const config_error& e) {
    EXPECT_NE(std::string(e.what()).find("made.up.key"), std::string::npos);
  }
  EXPECT_THROW(parse_config_text("sweep.snr_db = [1, 2]\n"), config_error);
  EXPECT_THROW(parse_config_text("attacker.strategy = sneaky\n"), config_error);
  EXPECT_THROW(parse_config_text("just a line\n"), config_error);
}

TEST(Config, ComplexLiterals) {
  const auto parse = [](const std::string& s) {
    return detail::parse_complex_value("attacker.precoding", s);
  };
  EXPECT_EQ(parse("1"), cplx(1.0, 0.0));
  EXPECT_EQ(parse("-0.5"), cplx(-0.5, 0.0));
  EXPECT_EQ(parse("0.3+0.4j"), cplx(0.3, 0.4));
  EXPECT_EQ(parse("0.3-0.4j"), cplx(0.3, -0.4));
  EXPECT_EQ(parse("0.5j"), cplx(0.0, 0.5));
  EXPECT_EQ(parse("-2j"), cplx(0.0, -2.0));
  EXPECT_EQ(parse("1e-3+2e-4j"), cplx(1e-3, 2e-4));
  EXPECT_EQ(parse("0.1 + 0.2i"), cplx(0.1, 0.2));
  EXPECT_THROW(parse("1+2"), config_error);
  EXPECT_THROW(parse("abc"), config_error);
}

TEST(Config, SerializeParseRoundTrip) {
  ExperimentConfig c;
  c.elements = 24;
  c.spacing_ratio = 0.4375;
  c.theta_deg = 12.25;
  c.attacker_count = 3;
  c.offsets_deg = {0.1, 0.2, 0.3};
  c.strategy = PrecodingStrategy::explicit_values;
  c.precoding = {cplx(0.5, 0.25), cplx(-0.25, 0.5), cplx(0.0, -0.6)};
  c.realizations = 77;
  c.snr = {5.0, 45.0, 2.5};
  c.offset_step_deg = 0.005;
  c.trials = 1234;
  c.seed = 0xdeadbeefULL;
  const ExperimentConfig back = parse_config_text(serialize_config(c));
  EXPECT_EQ(back, c);

  // defaults round-trip too
  const ExperimentConfig defaults;
  EXPECT_EQ(parse_config_text(serialize_config(defaults)), defaults);
}

TEST(Config, SnrSweepEdgeCases) {
  EXPECT_EQ((SnrSweep{0, 50, 5}).points().size(), 11u);
  EXPECT_EQ((SnrSweep{30, 30, 5}).points(), std::vector<double>{30});
  EXPECT_THROW((SnrSweep{0, 50, 0}).points(), config_error);
  EXPECT_THROW((SnrSweep{50, 0, 5}).points(), config_error);
}

TEST(Experiments, AttackerAssemblyRules) {
  ExperimentConfig c;
  c.attacker_count = 3;
  c.offsets_deg = {0.5};
  const ArrayGeometry g = geometry_from_config(c);
  const double theta = deg_to_rad(c.theta_deg);
  const AttackerConfig shared = build_attacker(c, g, theta);
  EXPECT_EQ(shared.count(), 3);
  for (const auto& comp : shared.components) {
    EXPECT_EQ(comp.angle, theta + deg_to_rad(0.5));
    EXPECT_NEAR(std::abs(comp.precoding), 1.0 / std::sqrt(3.0), 1e-15);
  }

  c.offsets_deg = {0.1, 0.2};
  EXPECT_THROW(build_attacker(c, g, theta), config_error);

  c.offsets_deg = {0.1, 0.2, 0.3};
  c.precoding = {cplx(1.0, 0.0)};
  EXPECT_THROW(build_attacker(c, g, theta), config_error);

  c.precoding.clear();
  c.strategy = PrecodingStrategy::random_phase;
  const AttackerConfig random_a = build_attacker(c, g, theta, 0);
  const AttackerConfig random_b = build_attacker(c, g, theta, 0);
  const AttackerConfig random_c = build_attacker(c, g, theta, 1);
  EXPECT_EQ(random_a.components[0].precoding, random_b.components[0].precoding);
  EXPECT_NE(random_a.components[0].precoding, random_c.components[0].precoding);
}

TEST(FormatDouble, RoundTripExact) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::ldexp(mant(rng), expo(rng));
    const std::string s = format_double(x);
    EXPECT_EQ(std::strtod(s.c_str(), nullptr), x) << s;
  }
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_THROW(format_double(std::nan("")), degenerate_scenario);
  EXPECT_THROW(format_double(INFINITY), degenerate_scenario);
}

TEST(CsvWriter, SchemaAndGuards) {
  CsvWriter csv({"a", "b", "c"});
  csv.add_row({1.5, static_cast<long long>(2), std::string("x")});
  EXPECT_EQ(csv.str(), "a,b,c\n1.5,2,x\n");
  EXPECT_THROW(csv.add_row({1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(csv.add_row({std::nan(""), 2.0, 3.0}), degenerate_scenario);
  EXPECT_THROW(csv.add_row({1.0, 2.0, std::string("bad,cell")}),
               std::invalid_argument);
  EXPECT_THROW(CsvWriter({"x"}).write_file("/nonexistent_dir/out.csv"), io_error);
}

TEST(Svg, RendersSeriesAndSkipsNonpositiveInLogMode) {
  std::vector<SvgSeries> series(2);
  series[0].label = "penalty M4";
  series[1].label = "penalty M8";
  for (int i = 0; i <= 10; ++i) {
    series[0].points.emplace_back(i * 0.1, i == 0 ? 0.0 : 1e-5 * i * i);
    series[1].points.emplace_back(i * 0.1, i == 0 ? 0.0 : 0.5e-5 * i * i);
  }
  const std::string body =
      render_line_plot(series, {"t", "offset (deg)", "penalty (rad^2)", true});
  EXPECT_NE(body.find("<svg"), std::string::npos);
  EXPECT_NE(body.find("penalty M4"), std::string::npos);
  EXPECT_NE(body.find("penalty M8"), std::string::npos);
  EXPECT_NE(body.find("<polyline"), std::string::npos);
  EXPECT_EQ(body.find("nan"), std::string::npos);
  EXPECT_EQ(body.find("inf"), std::string::npos);

  // all-nonpositive series in log mode still renders a valid document
  const std::string degenerate = render_line_plot(
      {{"zeros", {{0.0, 0.0}, {1.0, 0.0}}}}, {"", "x", "y", true});
  EXPECT_NE(degenerate.find("</svg>"), std::string::npos);
}

}  // namespace
