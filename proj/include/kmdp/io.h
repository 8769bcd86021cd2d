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

#ifndef KMDP_IO_H_
#define KMDP_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmdp/mechanism.h"
#include "kmdp/survival.h"

namespace kmdp {

// Column mapping for delimited survival files. The defaults follow the R
// survival package's `lung` data: status 2 = dead, 1 = censored.
struct IngestConfig {
  std::string time_column = "time";
  std::string status_column = "status";
  std::set<int64_t> event_codes = {2};
  std::set<int64_t> censored_codes = {1};
  std::string missing_token = "NA";
  char delimiter = ',';

  void Validate() const;
};

struct RejectedRow {
  int64_t row = 0;  // 1-based data row number (header excluded)
  std::string reason;
};

struct LoadResult {
  std::vector<SurvivalRecord> records;
  std::vector<RejectedRow> rejected;
  int64_t data_rows = 0;  // records.size() + rejected.size()
};

// Rows whose time or status is missing are rejected and reported, never
// dropped silently. A malformed time or an unknown status code is a hard
// error naming the row.
LoadResult load_records(std::istream& in, const IngestConfig& config = {});
LoadResult load_records(const std::filesystem::path& path,
                        const IngestConfig& config = {});

// Splits one delimited line. Double-quoted fields may contain the delimiter
// and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, char delimiter);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

enum class CurveFormat { kCsv, kJson };

// Infers the format from the extension: ".json" is JSON, anything else CSV.
CurveFormat curve_format_for(const std::filesystem::path& path);

// CSV: header "time,survival_prob", one row per step.
// JSON: {"times":[...],"probs":[...]}.
void write_curve(const SurvivalCurve& curve, std::ostream& out,
                 CurveFormat format);
void export_curve(const SurvivalCurve& curve,
                  const std::filesystem::path& path, CurveFormat format);

SurvivalCurve read_curve(std::istream& in, CurveFormat format);
SurvivalCurve import_curve(const std::filesystem::path& path,
                           CurveFormat format);

// Reads a sweep grid: CSV with an "epsilon" column and optional alpha,
// tau_start, tau_end, window, smoothing_mode and seed columns. Missing
// optional columns take `defaults`.
std::vector<DpParams> read_grid(std::istream& in, const DpParams& defaults);
std::vector<DpParams> read_grid(const std::filesystem::path& path,
                                const DpParams& defaults);

// Synthetic censored data: event times ~ Exponential(event_rate), censoring
// times ~ Uniform(0, censor_max); each subject observes the earlier of the
// two.
struct SyntheticConfig {
  int64_t size = 228;
  double event_rate = 1.0 / 300.0;
  double censor_max = 1000.0;
  bool integer_times = true;  // round up to whole days, which creates ties
  uint64_t seed = 0;
};

std::vector<SurvivalRecord> generate_synthetic(const SyntheticConfig& config);

// Writes records in the R lung layout (columns time,status; 2/1 coding).
void write_records(std::span<const SurvivalRecord> records, std::ostream& out);

}  // namespace kmdp

#endif  // KMDP_IO_H_
