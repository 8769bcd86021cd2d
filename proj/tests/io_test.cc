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

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "kmdp/error.h"
#include "test_util.h"

namespace kmdp {
namespace {

ErrorCode LoadError(const std::string& text) {
  std::istringstream in(text);
  try {
    load_records(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for:\n" << text;
  return ErrorCode::kInternal;
}

TEST(LoadRecordsTest, RLungCoding) {
  std::istringstream in(
      "\"inst\",\"time\",\"status\",\"age\"\n"
      "3,306,2,74\n"
      "3,1022,1,74\n"
      "NA,455,2,68\n");
  const LoadResult r = load_records(in);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0], (SurvivalRecord{306, true}));
  EXPECT_EQ(r.records[1], (SurvivalRecord{1022, false}));
  EXPECT_EQ(r.records[2], (SurvivalRecord{455, true}));
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(r.data_rows, 3);
}

TEST(LoadRecordsTest, MissingValuesAreRejectedNotDropped) {
  std::istringstream in(
      "time,status\r\n"
      "10,2\r\n"
      "NA,2\r\n"
      "20,\r\n"
      "\r\n"
      "30,1\r\n");
  const LoadResult r = load_records(in);
  EXPECT_EQ(r.records.size(), 2u);
  ASSERT_EQ(r.rejected.size(), 2u);
  EXPECT_EQ(r.rejected[0].row, 2);
  EXPECT_EQ(r.rejected[1].row, 3);
  EXPECT_NE(r.rejected[1].reason.find("status"), std::string::npos);
  EXPECT_EQ(r.data_rows,
            static_cast<int64_t>(r.records.size() + r.rejected.size()));
}

TEST(LoadRecordsTest, DistinctDiagnostics) {
  EXPECT_EQ(LoadError(""), ErrorCode::kEmptyFile);
  EXPECT_EQ(LoadError("time,event\n1,2\n"), ErrorCode::kMissingColumn);
  EXPECT_EQ(LoadError("days,status\n1,2\n"), ErrorCode::kMissingColumn);
  EXPECT_EQ(LoadError("time,status\nabc,2\n"), ErrorCode::kUnparseableValue);
  EXPECT_EQ(LoadError("time,status\n-4,2\n"), ErrorCode::kUnparseableValue);
  EXPECT_EQ(LoadError("time,status\n4,3\n"), ErrorCode::kUnknownStatus);
  EXPECT_EQ(LoadError("time,status\n4,1.5\n"), ErrorCode::kUnknownStatus);
  EXPECT_EQ(LoadError("time,status\n4\n"), ErrorCode::kUnparseableValue);
}

TEST(LoadRecordsTest, ErrorNamesRow) {
  std::istringstream in("time,status\n1,2\n2,9\n");
  try {
    load_records(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(LoadRecordsTest, CustomCoding) {
  IngestConfig config;
  config.time_column = "days";
  config.status_column = "dead";
  config.event_codes = {1};
  config.censored_codes = {0};
  config.delimiter = ';';
  std::istringstream in("days;dead\n5.5;1\n7;0\n");
  const LoadResult r = load_records(in, config);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0], (SurvivalRecord{5.5, true}));
  EXPECT_EQ(r.records[1], (SurvivalRecord{7, false}));

  config.censored_codes = {1};
  std::istringstream again("days;dead\n5;1\n");
  EXPECT_THROW(load_records(again, config), Error);
}

TEST(LoadRecordsTest, MissingFile) {
  try {
    load_records(std::filesystem::path("/nonexistent/lung.csv"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
  }
}

TEST(LoadRecordsTest, LungFileHas228Records) {
  const char* env = std::getenv("KMDP_LUNG_CSV");
  const std::filesystem::path path =
      env ? env : std::filesystem::path(KMDP_SOURCE_DIR) / "data/lung.csv";
  if (!std::filesystem::exists(path)) GTEST_SKIP() << "lung data not present";
  const LoadResult r = load_records(path);
  EXPECT_EQ(r.records.size(), 228u);
  EXPECT_TRUE(r.rejected.empty());
  EXPECT_EQ(r.records[0], (SurvivalRecord{306, true}));
}

TEST(SplitCsvLineTest, Quotes) {
  EXPECT_EQ(split_csv_line("a,\"b,c\",\"d\"\"e\",", ','),
            (std::vector<std::string>{"a", "b,c", "d\"e", ""}));
}

TEST(CurveExportTest, CsvLayout) {
  std::ostringstream empty;
  write_curve(SurvivalCurve{}, empty, CurveFormat::kCsv);
  EXPECT_EQ(empty.str(), "time,survival_prob\n");

  std::ostringstream two;
  write_curve(SurvivalCurve{{1, 3}, {2.0 / 3.0, 0.0}}, two, CurveFormat::kCsv);
  EXPECT_EQ(two.str(), "time,survival_prob\n1,0.6666666666666666\n3,0\n");
}

TEST(CurveExportTest, JsonLayout) {
  std::ostringstream out;
  write_curve(SurvivalCurve{{1, 3}, {0.5, 0.25}}, out, CurveFormat::kJson);
  EXPECT_EQ(out.str(), "{\"times\":[1,3],\"probs\":[0.5,0.25]}\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_curve(in, CurveFormat::kJson),
            (SurvivalCurve{{1, 3}, {0.5, 0.25}}));
}

TEST(CurveExportTest, RoundTripIsLosslessAndByteStable) {
  std::mt19937_64 gen(6);
  for (CurveFormat format : {CurveFormat::kCsv, CurveFormat::kJson}) {
    for (int iter = 0; iter < 50; ++iter) {
      const SurvivalCurve curve = testing::RandomCurve(gen, 30);
      std::ostringstream first;
      write_curve(curve, first, format);
      std::istringstream in(first.str());
      const SurvivalCurve back = read_curve(in, format);
      EXPECT_EQ(back, curve);
      std::ostringstream second;
      write_curve(back, second, format);
      EXPECT_EQ(first.str(), second.str());
    }
  }
}

TEST(CurveExportTest, FilesAndUnwritablePath) {
  const auto path =
      std::filesystem::temp_directory_path() / "kmdp_io_test_curve.json";
  const SurvivalCurve curve{{2, 4}, {0.9, 0.1}};
  export_curve(curve, path, curve_format_for(path));
  EXPECT_EQ(import_curve(path, CurveFormat::kJson), curve);
  std::filesystem::remove(path);
  try {
    export_curve(curve, "/nonexistent/dir/curve.csv", CurveFormat::kCsv);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(ReadGridTest, DefaultsAndOverrides) {
  std::istringstream in(
      "epsilon,alpha,window,smoothing_mode\n"
      "1,0.1,5,literal_w\n"
      "8,0.5,3,actual_count\n");
  DpParams defaults;
  defaults.seed = 4;
  const auto grid = read_grid(in, defaults);
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[0].epsilon, 1.0);
  EXPECT_EQ(grid[0].alpha, 0.1);
  EXPECT_EQ(grid[0].window, 5);
  EXPECT_EQ(grid[0].smoothing_mode, SmoothingMode::kLiteralW);
  EXPECT_EQ(grid[0].tau_start, 0.95);
  EXPECT_EQ(grid[1].seed, 4u);
}

TEST(ReadGridTest, Errors) {
  std::istringstream no_eps("alpha\n0.1\n");
  EXPECT_THROW(read_grid(no_eps, DpParams{}), Error);
  std::istringstream bad_window("epsilon,window\n1,4\n");
  EXPECT_THROW(read_grid(bad_window, DpParams{}), Error);
  std::istringstream bad_number("epsilon\nfoo\n");
  EXPECT_THROW(read_grid(bad_number, DpParams{}), Error);
}

TEST(SyntheticTest, DeterministicAndMixed) {
  SyntheticConfig config;
  config.seed = 12;
  const auto a = generate_synthetic(config);
  EXPECT_EQ(a, generate_synthetic(config));
  ASSERT_EQ(a.size(), 228u);
  const auto events = std::count_if(a.begin(), a.end(),
                                    [](const SurvivalRecord& r) { return r.event; });
  EXPECT_GT(events, 50);
  EXPECT_LT(events, 228);
  for (const auto& r : a) EXPECT_GE(r.time, 1.0);

  std::ostringstream out;
  write_records(a, out);
  std::istringstream in(out.str());
  EXPECT_EQ(load_records(in).records, a);
}

}  // namespace
}  // namespace kmdp
