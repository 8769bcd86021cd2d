//
// Copyright 2026 The kmdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "kmdp/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "kmdp/error.h"
#include "kmdp/random.h"
#include "json.hpp"

namespace kmdp {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> ParseDouble(std::string_view text) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::string RowLabel(int64_t row) { return "row " + std::to_string(row); }

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kNotFound,
                "cannot open '" + path.string() + "' for reading");
  }
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo,
                "cannot open '" + path.string() + "' for writing");
  }
  return out;
}

size_t FindColumn(const std::vector<std::string>& header,
                  const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (Trim(header[i]) == name) return i;
  }
  throw Error(ErrorCode::kMissingColumn, "missing column '" + name + "'");
}

bool ReadDataLine(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!Trim(line).empty()) return true;
  }
  return false;
}

}  // namespace

void IngestConfig::Validate() const {
  if (event_codes.empty() || censored_codes.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "event and censored status code sets must be non-empty");
  }
  for (int64_t code : event_codes) {
    if (censored_codes.count(code)) {
      throw Error(ErrorCode::kInvalidParameter,
                  "status code " + std::to_string(code) +
                      " is both an event and a censoring code");
    }
  }
}

std::vector<std::string> split_csv_line(std::string_view line,
                                        char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) {
    throw Error(ErrorCode::kInternal, "failed to format a double");
  }
  return std::string(buf, ptr);
}

LoadResult load_records(std::istream& in, const IngestConfig& config) {
  config.Validate();
  std::string line;
  if (!ReadDataLine(in, line)) {
    throw Error(ErrorCode::kEmptyFile, "empty file: no header row");
  }
  const std::vector<std::string> header =
      split_csv_line(line, config.delimiter);
  const size_t time_col = FindColumn(header, config.time_column);
  const size_t status_col = FindColumn(header, config.status_column);

  LoadResult result;
  int64_t row = 0;
  while (ReadDataLine(in, line)) {
    ++row;
    const std::vector<std::string> fields =
        split_csv_line(line, config.delimiter);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kUnparseableValue,
                  RowLabel(row) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    const std::string_view time_text = Trim(fields[time_col]);
    const std::string_view status_text = Trim(fields[status_col]);
    const auto missing = [&](std::string_view v) {
      return v.empty() || v == config.missing_token;
    };
    if (missing(time_text) || missing(status_text)) {
      result.rejected.push_back(
          {row, missing(time_text) ? "missing " + config.time_column
                                   : "missing " + config.status_column});
      continue;
    }

    const std::optional<double> time = ParseDouble(time_text);
    if (!time || !std::isfinite(*time) || *time < 0.0) {
      throw Error(ErrorCode::kUnparseableValue,
                  RowLabel(row) + ": cannot parse " + config.time_column +
                      " '" + std::string(time_text) +
                      "' as a finite non-negative number");
    }
    const std::optional<double> status = ParseDouble(status_text);
    const bool integral = status && std::isfinite(*status) &&
                          std::trunc(*status) == *status &&
                          std::abs(*status) < 9.0e15;
    const auto code = integral ? static_cast<int64_t>(*status) : int64_t{0};
    if (integral && config.event_codes.count(code)) {
      result.records.push_back({*time, true});
    } else if (integral && config.censored_codes.count(code)) {
      result.records.push_back({*time, false});
    } else {
      throw Error(ErrorCode::kUnknownStatus,
                  RowLabel(row) + ": unknown " + config.status_column +
                      " code '" + std::string(status_text) + "'");
    }
  }
  result.data_rows = row;
  return result;
}

LoadResult load_records(const std::filesystem::path& path,
                        const IngestConfig& config) {
  std::ifstream in = OpenInput(path);
  return load_records(in, config);
}

CurveFormat curve_format_for(const std::filesystem::path& path) {
  return path.extension() == ".json" ? CurveFormat::kJson : CurveFormat::kCsv;
}

void write_curve(const SurvivalCurve& curve, std::ostream& out,
                 CurveFormat format) {
  if (curve.times.size() != curve.probs.size()) {
    throw Error(ErrorCode::kInvalidParameter,
                "curve has mismatched times and probs");
  }
  if (format == CurveFormat::kCsv) {
    out << "time,survival_prob\n";
    for (size_t i = 0; i < curve.size(); ++i) {
      out << format_double(curve.times[i]) << ','
          << format_double(curve.probs[i]) << '\n';
    }
    return;
  }
  // Build the JSON text by hand so the number formatting matches the CSV.
  out << "{\"times\":[";
  for (size_t i = 0; i < curve.size(); ++i) {
    out << (i ? "," : "") << format_double(curve.times[i]);
  }
  out << "],\"probs\":[";
  for (size_t i = 0; i < curve.size(); ++i) {
    out << (i ? "," : "") << format_double(curve.probs[i]);
  }
  out << "]}\n";
}

void export_curve(const SurvivalCurve& curve,
                  const std::filesystem::path& path, CurveFormat format) {
  std::ofstream out = OpenOutput(path);
  write_curve(curve, out, format);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, "failed writing '" + path.string() + "'");
  }
}

SurvivalCurve read_curve(std::istream& in, CurveFormat format) {
  SurvivalCurve curve;
  if (format == CurveFormat::kJson) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
      curve.times = doc.at("times").get<std::vector<double>>();
      curve.probs = doc.at("probs").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kUnparseableValue,
                  std::string("malformed curve JSON: ") + e.what());
    }
    if (curve.times.size() != curve.probs.size()) {
      throw Error(ErrorCode::kUnparseableValue,
                  "curve JSON has arrays of different lengths");
    }
    return curve;
  }

  std::string line;
  if (!ReadDataLine(in, line)) {
    throw Error(ErrorCode::kEmptyFile, "empty file: no curve header");
  }
  const std::vector<std::string> header = split_csv_line(line, ',');
  const size_t time_col = FindColumn(header, "time");
  const size_t prob_col = FindColumn(header, "survival_prob");
  int64_t row = 0;
  while (ReadDataLine(in, line)) {
    ++row;
    const std::vector<std::string> fields = split_csv_line(line, ',');
    const auto t = fields.size() == header.size()
                       ? ParseDouble(fields[time_col])
                       : std::nullopt;
    const auto p = fields.size() == header.size()
                       ? ParseDouble(fields[prob_col])
                       : std::nullopt;
    if (!t || !p) {
      throw Error(ErrorCode::kUnparseableValue,
                  RowLabel(row) + ": malformed curve row '" + line + "'");
    }
    curve.times.push_back(*t);
    curve.probs.push_back(*p);
  }
  return curve;
}

SurvivalCurve import_curve(const std::filesystem::path& path,
                           CurveFormat format) {
  std::ifstream in = OpenInput(path);
  return read_curve(in, format);
}

std::vector<DpParams> read_grid(std::istream& in, const DpParams& defaults) {
  std::string line;
  if (!ReadDataLine(in, line)) {
    throw Error(ErrorCode::kEmptyFile, "empty file: no grid header");
  }
  const std::vector<std::string> header = split_csv_line(line, ',');
  std::map<std::string, size_t, std::less<>> columns;
  for (size_t i = 0; i < header.size(); ++i) {
    columns.emplace(std::string(Trim(header[i])), i);
  }
  if (!columns.count("epsilon")) {
    throw Error(ErrorCode::kMissingColumn, "missing column 'epsilon'");
  }

  std::vector<DpParams> grid;
  int64_t row = 0;
  while (ReadDataLine(in, line)) {
    ++row;
    const std::vector<std::string> fields = split_csv_line(line, ',');
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kUnparseableValue,
                  RowLabel(row) + ": expected " +
                      std::to_string(header.size()) + " fields");
    }
    const auto number = [&](std::string_view name,
                            double fallback) -> double {
      auto it = columns.find(name);
      if (it == columns.end()) return fallback;
      const auto value = ParseDouble(fields[it->second]);
      if (!value) {
        throw Error(ErrorCode::kUnparseableValue,
                    RowLabel(row) + ": cannot parse " + std::string(name) +
                        " '" + fields[it->second] + "'");
      }
      return *value;
    };

    DpParams p = defaults;
    p.epsilon = number("epsilon", defaults.epsilon);
    p.alpha = number("alpha", defaults.alpha);
    p.tau_start = number("tau_start", defaults.tau_start);
    p.tau_end = number("tau_end", defaults.tau_end);
    const double window = number("window", defaults.window);
    if (std::trunc(window) != window || std::abs(window) > 1e9) {
      throw Error(ErrorCode::kInvalidParameter,
                  RowLabel(row) + ": window must be an integer");
    }
    p.window = static_cast<int>(window);
    const double seed = number("seed", static_cast<double>(defaults.seed));
    if (seed < 0 || std::trunc(seed) != seed || seed >= 0x1.0p53) {
      throw Error(ErrorCode::kInvalidParameter,
                  RowLabel(row) + ": seed must be a non-negative integer");
    }
    p.seed = static_cast<uint64_t>(seed);
    if (auto it = columns.find("smoothing_mode"); it != columns.end()) {
      p.smoothing_mode = ParseSmoothingMode(Trim(fields[it->second]));
    }
    try {
      p.Validate();
    } catch (const Error& e) {
      throw Error(e.code(), RowLabel(row) + ": " + e.what());
    }
    grid.push_back(p);
  }
  return grid;
}

std::vector<DpParams> read_grid(const std::filesystem::path& path,
                                const DpParams& defaults) {
  std::ifstream in = OpenInput(path);
  return read_grid(in, defaults);
}

std::vector<SurvivalRecord> generate_synthetic(const SyntheticConfig& config) {
  if (config.size < 1 || !(config.event_rate > 0.0) ||
      !(config.censor_max > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "synthetic data needs size >= 1, event_rate > 0 and "
                "censor_max > 0");
  }
  RandomStream rng(SubstreamKey(config.seed, {0x53594e54}));
  std::vector<SurvivalRecord> records;
  records.reserve(static_cast<size_t>(config.size));
  for (int64_t i = 0; i < config.size; ++i) {
    const double event_time = -std::log(rng.NextOpenUnit()) / config.event_rate;
    const double censor_time = rng.NextOpenUnit() * config.censor_max;
    double time = std::min(event_time, censor_time);
    if (config.integer_times) time = std::ceil(time);
    records.push_back({time, event_time <= censor_time});
  }
  return records;
}

void write_records(std::span<const SurvivalRecord> records,
                   std::ostream& out) {
  out << "time,status\n";
  for (const SurvivalRecord& r : records) {
    out << format_double(r.time) << ',' << (r.event ? 2 : 1) << '\n';
  }
}

}  // namespace kmdp
