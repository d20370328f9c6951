#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aoabound/errors.hpp"

namespace aoabound {

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (x, y)
};

struct SvgOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = true;
  int width = 820;
  int height = 560;
};

namespace detail {

inline std::string num_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

inline double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mag * mult >= raw) return mag * mult;
  }
  return mag * 10.0;
}

inline void emit_point(std::string& segment, double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
  segment += buf;
}

}  // namespace detail

// Static line chart: linear x axis, linear or log10 y axis, grid lines,
// legend. In log mode points with y <= 0 are skipped and the polyline breaks
// around them. CSV stays the authoritative output; this is for eyeballing.
inline std::string render_line_plot(const std::vector<SvgSeries>& series,
                                    const SvgOptions& opt) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#17becf", "#8c564b", "#7f7f7f"};
  const double ml = 86, mr = 24, mt = 46, mb = 62;  // margins
  const double pw = opt.width - ml - mr;
  const double ph = opt.height - mt - mb;

  double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
  double y_min = x_min, y_max = -x_min;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (opt.log_y && y <= 0.0) continue;
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      const double yv = opt.log_y ? std::log10(y) : y;
      y_min = std::min(y_min, yv);
      y_max = std::max(y_max, yv);
    }
  }
  if (!(x_min <= x_max)) { x_min = 0; x_max = 1; y_min = 0; y_max = 1; }
  if (x_max == x_min) { x_min -= 0.5; x_max += 0.5; }
  if (y_max == y_min) { y_min -= 0.5; y_max += 0.5; }

  const auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
  const auto py = [&](double yv) { return mt + (y_max - yv) / (y_max - y_min) * ph; };

  std::string out;
  char buf[256];
  const auto emit = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
  };

  emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
       "viewBox=\"0 0 %d %d\">\n", opt.width, opt.height, opt.width, opt.height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!opt.title.empty()) {
    emit("<text x=\"%g\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" "
         "text-anchor=\"middle\">%s</text>\n", ml + pw / 2, opt.title.c_str());
  }

  // x ticks
  const double xs = detail::nice_step(x_max - x_min, 6);
  for (double x = std::ceil(x_min / xs) * xs; x <= x_max + 1e-9 * xs; x += xs) {
    emit("<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"#dddddd\"/>\n",
         px(x), mt, px(x), mt + ph);
    emit("<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
         "text-anchor=\"middle\">%s</text>\n",
         px(x), mt + ph + 16, detail::num_label(x).c_str());
  }
  // y ticks
  if (opt.log_y) {
    const int d0 = static_cast<int>(std::floor(y_min));
    const int d1 = static_cast<int>(std::ceil(y_max));
    const int step = std::max(1, (d1 - d0) / 8);
    for (int d = d0; d <= d1; d += step) {
      if (d < y_min - 1e-9 || d > y_max + 1e-9) continue;
      emit("<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"#dddddd\"/>\n",
           ml, py(d), ml + pw, py(d));
      emit("<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\">1e%d</text>\n", ml - 6, py(d) + 4, d);
    }
  } else {
    const double ys = detail::nice_step(y_max - y_min, 6);
    for (double y = std::ceil(y_min / ys) * ys; y <= y_max + 1e-9 * ys; y += ys) {
      emit("<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"#dddddd\"/>\n",
           ml, py(y), ml + pw, py(y));
      emit("<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
           "text-anchor=\"end\">%s</text>\n", ml - 6, py(y) + 4,
           detail::num_label(y).c_str());
    }
  }
  // frame + axis labels
  emit("<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" fill=\"none\" "
       "stroke=\"#333333\"/>\n", ml, mt, pw, ph);
  if (!opt.x_label.empty()) {
    emit("<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\">%s</text>\n",
         ml + pw / 2, mt + ph + 42, opt.x_label.c_str());
  }
  if (!opt.y_label.empty()) {
    emit("<text x=\"18\" y=\"%g\" font-family=\"sans-serif\" font-size=\"13\" "
         "text-anchor=\"middle\" transform=\"rotate(-90 18 %g)\">%s</text>\n",
         mt + ph / 2, mt + ph / 2, opt.y_label.c_str());
  }

  // series polylines (broken at skipped points)
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    std::string segment;
    const auto flush = [&] {
      if (!segment.empty()) {
        out += "<polyline fill=\"none\" stroke=\"";
        out += color;
        out += "\" stroke-width=\"1.6\" points=\"" + segment + "\"/>\n";
        segment.clear();
      }
    };
    for (const auto& [x, y] : series[s].points) {
      const bool ok = std::isfinite(x) && std::isfinite(y) &&
                      (!opt.log_y || y > 0.0);
      if (!ok) { flush(); continue; }
      const double yv = opt.log_y ? std::log10(y) : y;
      detail::emit_point(segment, px(x), py(yv));
    }
    flush();
  }

  // legend
  const double lx = ml + pw - 220, ly = mt + 10;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    emit("<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" "
         "stroke-width=\"2\"/>\n", lx, ly + 16.0 * s, lx + 22, ly + 16.0 * s, color);
    emit("<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\">"
         "%s</text>\n", lx + 28, ly + 16.0 * s + 4, series[s].label.c_str());
  }

  out += "</svg>\n";
  return out;
}

inline void write_line_plot(const std::filesystem::path& path,
                            const std::vector<SvgSeries>& series,
                            const SvgOptions& opt) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open for writing: " + path.string());
  const std::string body = render_line_plot(series, opt);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw io_error("write failed: " + path.string());
}

}  // namespace aoabound
