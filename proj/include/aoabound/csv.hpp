#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "aoabound/errors.hpp"

namespace aoabound {

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double value) {
  if (!std::isfinite(value)) {
    throw degenerate_scenario("refusing to format a non-finite value");
  }
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

// Fixed-schema CSV table: header row, '.' decimal separator, round-trip
// exact floating-point rendering. Non-finite values are rejected at
// insertion so degenerate rows can never reach an output file.
class CsvWriter {
 public:
  using Value = std::variant<double, long long, std::uint64_t, std::string>;

  explicit CsvWriter(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(const std::vector<Value>& row) {
    if (row.size() != columns_.size()) {
      throw std::invalid_argument("CSV row width differs from header");
    }
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += ',';
      line += render(row[i]);
    }
    lines_.push_back(std::move(line));
  }

  // Comment line (diagnostics such as row-level errors); never part of the
  // tabular schema.
  void add_comment(const std::string& text) { lines_.push_back("# " + text); }

  std::size_t row_count() const { return lines_.size(); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0) out += ',';
      out += columns_[i];
    }
    out += '\n';
    for (const auto& line : lines_) {
      out += line;
      out += '\n';
    }
    return out;
  }

  void write_file(const std::filesystem::path& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open for writing: " + path.string());
    const std::string body = str();
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f) throw io_error("write failed: " + path.string());
  }

 private:
  static std::string render(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
    if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
    if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
    const auto& s = std::get<std::string>(v);
    if (s.find_first_of(",\n\"") != std::string::npos) {
      throw std::invalid_argument("CSV cell must not contain ',', '\"' or newline");
    }
    return s;
  }

  std::vector<std::string> columns_;
  std::vector<std::string> lines_;
};

}  // namespace aoabound
