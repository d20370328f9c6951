#pragma once

#include <charconv>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aoabound/csv.hpp"
#include "aoabound/errors.hpp"

namespace aoabound {

enum class PrecodingStrategy {
  explicit_values,
  random_phase,
  worst_case,
  worst_case_unconstrained_magnitudes,
};

inline std::string to_string(PrecodingStrategy s) {
  switch (s) {
    case PrecodingStrategy::explicit_values: return "explicit";
    case PrecodingStrategy::random_phase: return "random_phase";
    case PrecodingStrategy::worst_case: return "worst_case";
    case PrecodingStrategy::worst_case_unconstrained_magnitudes:
      return "worst_case_unconstrained_magnitudes";
  }
  return "explicit";
}

inline PrecodingStrategy parse_strategy(std::string_view text) {
  if (text == "explicit") return PrecodingStrategy::explicit_values;
  if (text == "random_phase") return PrecodingStrategy::random_phase;
  if (text == "worst_case") return PrecodingStrategy::worst_case;
  if (text == "worst_case_unconstrained_magnitudes") {
    return PrecodingStrategy::worst_case_unconstrained_magnitudes;
  }
  throw config_error(
      "attacker.strategy: expected one of explicit, random_phase, worst_case, "
      "worst_case_unconstrained_magnitudes");
}

struct SnrSweep {
  double start_db = 0.0;
  double stop_db = 50.0;
  double step_db = 5.0;

  std::vector<double> points() const {
    if (!(step_db > 0.0)) throw config_error("sweep.snr_db: step must be positive");
    if (stop_db < start_db) {
      throw config_error("sweep.snr_db: stop must be >= start");
    }
    std::vector<double> out;
    const auto n =
        static_cast<int>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(start_db + i * step_db);
    return out;
  }

  bool operator==(const SnrSweep&) const = default;
};

// Everything a figure or sweep run needs. Defaults: half-wavelength spacing,
// theta = 10 degrees, M = 16, single spoofing component offset 0.5 degrees,
// SNR swept over [0, 50] dB, 4000 trials per point.
struct ExperimentConfig {
  int elements = 16;
  double spacing_ratio = 0.5;
  double theta_deg = 10.0;
  int attacker_count = 1;
  std::vector<double> offsets_deg = {0.5};
  PrecodingStrategy strategy = PrecodingStrategy::explicit_values;
  std::vector<std::complex<double>> precoding;  // explicit strategy only;
                                                // empty means uniform 1/sqrt(L)
  int realizations = 200;
  SnrSweep snr;
  double offset_step_deg = 0.01;  // offset-grid resolution
  long long trials = 4000;
  std::uint64_t seed = 1729;

  bool operator==(const ExperimentConfig&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

inline double parse_double_value(std::string_view key, std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);  // from_chars rejects '+'
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw config_error(std::string(key) + ": expected a number, got '" +
                       std::string(t) + "'");
  }
  return value;
}

inline long long parse_int_value(std::string_view key, std::string_view text) {
  const auto t = trim(text);
  long long value = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw config_error(std::string(key) + ": expected an integer, got '" +
                       std::string(t) + "'");
  }
  return value;
}

inline std::uint64_t parse_u64_value(std::string_view key, std::string_view text) {
  const auto t = trim(text);
  std::uint64_t value = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw config_error(std::string(key) +
                       ": expected an unsigned integer, got '" + std::string(t) +
                       "'");
  }
  return value;
}

inline std::vector<std::string> parse_list(std::string_view key,
                                           std::string_view text) {
  auto t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw config_error(std::string(key) + ": expected a [a, b, ...] list");
  }
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> items;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t comma = t.find(',', start);
    const auto piece =
        trim(t.substr(start, comma == std::string_view::npos ? t.size() - start
                                                             : comma - start));
    if (!piece.empty()) items.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

// Complex literal: "1", "-0.5", "0.3+0.4j", "0.3-0.4j", "0.5j". 'i' is
// accepted in place of 'j'.
inline std::complex<double> parse_complex_value(std::string_view key,
                                                std::string_view text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '\t') t += c;
  }
  if (t.empty()) throw config_error(std::string(key) + ": empty complex literal");
  const bool has_imag_suffix = t.back() == 'j' || t.back() == 'i';
  // find the sign separating real and imaginary parts (skip exponent signs)
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
    }
  }
  const auto number = [&](std::string_view piece) {
    return parse_double_value(key, piece);
  };
  if (!has_imag_suffix) {
    if (split != std::string::npos) {
      throw config_error(std::string(key) + ": malformed complex literal '" +
                         t + "'");
    }
    return {number(t), 0.0};
  }
  std::string_view body(t);
  body.remove_suffix(1);  // drop j/i
  if (split == std::string::npos) {
    if (body.empty() || body == "+" || body == "-") {
      return {0.0, body == "-" ? -1.0 : 1.0};
    }
    return {0.0, number(body)};
  }
  const auto re = body.substr(0, split);
  auto im = body.substr(split);
  if (im == "+" || im == "-") return {number(re), im == "-" ? -1.0 : 1.0};
  return {number(re), number(im)};
}

inline std::string format_complex(std::complex<double> v) {
  std::string out = format_double(v.real());
  out += v.imag() < 0 ? "-" : "+";
  out += format_double(std::abs(v.imag()));
  out += 'j';
  return out;
}

}  // namespace detail

// Applies one dotted key. The same names are accepted as CLI flag overrides.
inline void apply_config_key(ExperimentConfig& config, std::string_view key,
                             std::string_view value) {
  using namespace detail;
  if (key == "geometry.elements") {
    config.elements = static_cast<int>(parse_int_value(key, value));
  } else if (key == "geometry.spacing_ratio") {
    config.spacing_ratio = parse_double_value(key, value);
  } else if (key == "scenario.theta_deg") {
    config.theta_deg = parse_double_value(key, value);
  } else if (key == "attacker.count") {
    config.attacker_count = static_cast<int>(parse_int_value(key, value));
  } else if (key == "attacker.offsets_deg") {
    config.offsets_deg.clear();
    for (const auto& item : parse_list(key, value)) {
      config.offsets_deg.push_back(parse_double_value(key, item));
    }
  } else if (key == "attacker.strategy") {
    config.strategy = parse_strategy(trim(value));
  } else if (key == "attacker.precoding") {
    config.precoding.clear();
    for (const auto& item : parse_list(key, value)) {
      config.precoding.push_back(parse_complex_value(key, item));
    }
  } else if (key == "attacker.realizations") {
    config.realizations = static_cast<int>(parse_int_value(key, value));
  } else if (key == "sweep.snr_db") {
    const auto items = parse_list(key, value);
    if (items.size() != 3) {
      throw config_error("sweep.snr_db: expected [start, stop, step]");
    }
    config.snr.start_db = parse_double_value(key, items[0]);
    config.snr.stop_db = parse_double_value(key, items[1]);
    config.snr.step_db = parse_double_value(key, items[2]);
  } else if (key == "sweep.offset_step_deg") {
    config.offset_step_deg = parse_double_value(key, value);
  } else if (key == "mc.trials") {
    config.trials = parse_int_value(key, value);
  } else if (key == "mc.seed") {
    config.seed = parse_u64_value(key, value);
  } else {
    throw config_error("unknown config key '" + std::string(key) + "'");
  }
}

// Lines of "dotted.key = value"; '#' starts a comment; blank lines ignored.
inline ExperimentConfig parse_config_text(std::string_view text) {
  ExperimentConfig config;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    auto line = detail::trim(text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = detail::trim(line.substr(0, hash));
    }
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw config_error("line " + std::to_string(line_no) +
                         ": expected 'key = value'");
    }
    apply_config_key(config, detail::trim(line.substr(0, eq)),
                     detail::trim(line.substr(eq + 1)));
  }
  return config;
}

inline ExperimentConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open config file: " + path.string());
  std::ostringstream body;
  body << f.rdbuf();
  return parse_config_text(body.str());
}

// Canonical text form; parse(serialize(c)) == c.
inline std::string serialize_config(const ExperimentConfig& c) {
  using detail::format_complex;
  std::string out;
  const auto list = [](const auto& values, auto&& render) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) s += ", ";
      s += render(values[i]);
    }
    return s + "]";
  };
  out += "geometry.elements = " + std::to_string(c.elements) + "\n";
  out += "geometry.spacing_ratio = " + format_double(c.spacing_ratio) + "\n";
  out += "scenario.theta_deg = " + format_double(c.theta_deg) + "\n";
  out += "attacker.count = " + std::to_string(c.attacker_count) + "\n";
  out += "attacker.offsets_deg = " +
         list(c.offsets_deg, [](double v) { return format_double(v); }) + "\n";
  out += "attacker.strategy = " + to_string(c.strategy) + "\n";
  if (!c.precoding.empty()) {
    out += "attacker.precoding = " +
           list(c.precoding,
                [](std::complex<double> v) { return detail::format_complex(v); }) +
           "\n";
  }
  out += "attacker.realizations = " + std::to_string(c.realizations) + "\n";
  out += "sweep.snr_db = [" + format_double(c.snr.start_db) + ", " +
         format_double(c.snr.stop_db) + ", " + format_double(c.snr.step_db) +
         "]\n";
  out += "sweep.offset_step_deg = " + format_double(c.offset_step_deg) + "\n";
  out += "mc.trials = " + std::to_string(c.trials) + "\n";
  out += "mc.seed = " + std::to_string(c.seed) + "\n";
  return out;
}

}  // namespace aoabound
