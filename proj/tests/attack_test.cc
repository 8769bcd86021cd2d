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

#include "kmdp/attack.h"

#include <cmath>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "kmdp/error.h"
#include "kmdp/io.h"

namespace kmdp {
namespace {

SurvivalRecord E(double t) { return {t, true}; }
SurvivalRecord C(double t) { return {t, false}; }

DpParams Unsmoothed() {
  DpParams p;
  p.window = 1;
  return p;
}

TEST(InfluentialPointsTest, Examples) {
  const SurvivalCurve a{{1, 2}, {0.5, 0.5}};
  const SurvivalCurve b{{1, 2}, {0.4, 0.2}};
  EXPECT_EQ(influential_points(a, a, 0.0).count, 0);
  EXPECT_EQ(influential_points(a, b, 0.05).count, 2);
  const InfluentialPoints one = influential_points(a, b, 0.2);
  EXPECT_EQ(one.count, 1);
  EXPECT_EQ(one.times, std::vector<double>{2});
  EXPECT_EQ(influential_points(a, b, 1.0).count, 0);
}

TEST(InfluentialPointsTest, ComparesOnUnionGrid) {
  const SurvivalCurve a{{1, 3}, {0.8, 0.2}};
  const SurvivalCurve b{{2}, {0.5}};
  EXPECT_EQ(union_grid(a, b), (std::vector<double>{1, 2, 3}));
  // a: 0.8, 0.8, 0.2 ; b: 1, 0.5, 0.5 -> diffs 0.2, 0.3, 0.3
  EXPECT_EQ(influential_points(a, b, 0.25).count, 2);
  EXPECT_EQ(influential_points(a, b, 0.1).count, 3);
  EXPECT_EQ(influential_points(b, a, 0.25).count, 2);
}

TEST(LeaveOneOutTest, DuplicateTargetByHand) {
  // Full data: S = 1/2 at t=1, 1/4 at t=2. Without one E(1): 2/3, 1/3.
  const std::vector<SurvivalRecord> records = {E(1), E(1), E(2), C(3)};
  const ReleasePair pair =
      leave_one_out_release(records, 0, Unsmoothed(), 0, {.noise = false});
  EXPECT_EQ(pair.with_target.times, (std::vector<double>{1, 2}));
  EXPECT_EQ(pair.without_target.times, (std::vector<double>{1, 2}));
  EXPECT_DOUBLE_EQ(pair.with_target.probs[0], 0.5);
  EXPECT_DOUBLE_EQ(pair.with_target.probs[1], 0.25);
  EXPECT_DOUBLE_EQ(pair.without_target.probs[0], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(pair.without_target.probs[1], 1.0 / 3.0);

  const double max_diff = 1.0 / 6.0;
  EXPECT_EQ(
      influential_points(pair.with_target, pair.without_target, max_diff + 1e-9)
          .count,
      0);
  EXPECT_EQ(influential_points(pair.with_target, pair.without_target, 0.1).count,
            1);
  EXPECT_EQ(
      influential_points(pair.with_target, pair.without_target, 0.05).count, 2);
}

TEST(LeaveOneOutTest, LateCensoredTargetOnlyShiftsAtRiskCounts) {
  // With C(5): 3/4, 1/2, 1/4. Without it: 2/3, 1/3, 0.
  const std::vector<SurvivalRecord> records = {E(1), E(2), E(3), C(5)};
  DpParams params = Unsmoothed();
  params.tau_start = 1.0;
  params.tau_end = 1.0;
  const ReleasePair pair =
      leave_one_out_release(records, 3, params, 0, {.noise = false});
  EXPECT_EQ(pair.with_target.times, pair.without_target.times);
  EXPECT_DOUBLE_EQ(pair.with_target.probs[0], 0.75);
  EXPECT_DOUBLE_EQ(pair.with_target.probs[2], 0.25);
  EXPECT_DOUBLE_EQ(pair.without_target.probs[0], 2.0 / 3.0);
  EXPECT_EQ(pair.without_target.probs[2], 0.0);
}

TEST(LeaveOneOutTest, DeterministicPairs) {
  SyntheticConfig config;
  config.size = 60;
  const auto records = generate_synthetic(config);
  DpParams params;
  params.seed = 31;
  const ReleasePair a = leave_one_out_release(records, 5, params, 7);
  const ReleasePair b = leave_one_out_release(records, 5, params, 7);
  EXPECT_EQ(a.with_target, b.with_target);
  EXPECT_EQ(a.without_target, b.without_target);
}

TEST(LeaveOneOutTest, Errors) {
  const std::vector<SurvivalRecord> records = {E(1), C(2)};
  try {
    leave_one_out_release(records, 0, DpParams{}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateDataset);
  }
  EXPECT_THROW(leave_one_out_release(records, 2, DpParams{}, 0), Error);
}

TEST(AttackTrialsTest, ZeroTrials) {
  const std::vector<SurvivalRecord> records = {E(1), E(2), C(3)};
  const std::vector<double> thresholds = {0.05, 0.1};
  const AttackReport report =
      attack_trials(records, 0, DpParams{}, thresholds, 0);
  EXPECT_TRUE(report.per_trial_counts.empty());
  EXPECT_TRUE(report.union_grid.empty());
  const auto summary = summarize(report);
  ASSERT_EQ(summary.size(), 2u);
  EXPECT_EQ(summary[0].mean_count, 0.0);
}

TEST(AttackTrialsTest, CountsMonotoneAndBounded) {
  SyntheticConfig config;
  config.seed = 9;
  const auto records = generate_synthetic(config);
  const std::vector<double> thresholds = {0.0, 0.05, 0.1, 0.5, 0.7, 1.0};
  for (double eps : {0.5, 2.0, 10.0}) {
    DpParams params;
    params.epsilon = eps;
    const AttackReport report = attack_trials(
        records, max_time_target(records), params, thresholds, 40);
    ASSERT_EQ(report.per_trial_counts.size(), 40u);
    for (const auto& counts : report.per_trial_counts) {
      ASSERT_EQ(counts.size(), thresholds.size());
      for (size_t k = 1; k < counts.size(); ++k) {
        EXPECT_LE(counts[k], counts[k - 1]);
      }
      EXPECT_LE(counts.front(), report.max_grid_size);
      EXPECT_EQ(counts.back(), 0);
    }
  }
}

TEST(AttackTrialsTest, UnsortedThresholdsRejected) {
  const std::vector<SurvivalRecord> records = {E(1), E(2), C(3)};
  const std::vector<double> thresholds = {0.5, 0.1};
  EXPECT_THROW(attack_trials(records, 0, DpParams{}, thresholds, 3), Error);
}

TEST(AttackTrialsTest, NoNoiseDuplicateBelowAnalyticMax) {
  const std::vector<SurvivalRecord> records = {E(1), E(1), E(2), C(3)};
  const std::vector<double> thresholds = {0.05, 1.0 / 6.0 + 1e-9, 0.5};
  const AttackReport report = attack_trials(records, 1, Unsmoothed(),
                                            thresholds, 5, {.noise = false});
  for (const auto& counts : report.per_trial_counts) {
    EXPECT_EQ(counts, (std::vector<int64_t>{2, 0, 0}));
  }
}

TEST(AttackTrialsTest, CsvLayout) {
  const std::vector<SurvivalRecord> records = {E(1), E(2), E(3), C(4)};
  const std::vector<double> thresholds = {0.05, 0.1, 0.5, 0.7};
  DpParams params;
  params.epsilon = 10;
  const AttackReport report = attack_trials(records, 0, params, thresholds, 3);
  std::ostringstream detail;
  write_attack_csv(report, detail);
  const std::string text = detail.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "trial,threshold,influential_count");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13);
  std::ostringstream summary;
  write_attack_summary_csv(report, summary);
  EXPECT_EQ(summary.str().substr(0, summary.str().find('\n')),
            "epsilon,threshold,mean_count,min_count,max_count");
  EXPECT_NE(summary.str().find("\n10,0.05,"), std::string::npos);
}

TEST(MaxTimeTargetTest, PicksLatestEvent) {
  const std::vector<SurvivalRecord> records = {E(4), C(9), E(7), E(7)};
  EXPECT_EQ(max_time_target(records), 2u);
  EXPECT_THROW(max_time_target(std::vector<SurvivalRecord>{C(1)}), Error);
}

}  // namespace
}  // namespace kmdp
