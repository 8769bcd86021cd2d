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

#ifndef KMDP_ATTACK_H_
#define KMDP_ATTACK_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kmdp/mechanism.h"
#include "kmdp/survival.h"

namespace kmdp {

// Leave-one-out membership inference: compare a release on the full data
// with a release on the data minus one target record.

struct ReleasePair {
  SurvivalCurve with_target;
  SurvivalCurve without_target;
};

// Both arms are released independently: the full data from substream
// (seed, trial, 0), the reduced data from (seed, trial, 1). Throws
// kDegenerateDataset when removing the target leaves no events.
ReleasePair leave_one_out_release(std::span<const SurvivalRecord> records,
                                  size_t target_index, const DpParams& params,
                                  uint64_t trial,
                                  const StageToggles& toggles = {});

struct InfluentialPoints {
  int64_t count = 0;
  std::vector<double> times;
};

// Sorted union of both time grids.
std::vector<double> union_grid(const SurvivalCurve& a, const SurvivalCurve& b);

// Points of the union grid where |a(t) - b(t)| > threshold.
InfluentialPoints influential_points(const SurvivalCurve& a,
                                     const SurvivalCurve& b, double threshold);

struct AttackReport {
  size_t target_index = 0;
  double epsilon = 0.0;
  std::vector<double> thresholds;
  // per_trial_counts[trial][k] is the count for thresholds[k].
  std::vector<std::vector<int64_t>> per_trial_counts;
  // Union grid of the first trial; empty when trials == 0.
  std::vector<double> union_grid;
  // Largest union-grid size seen in any trial.
  int64_t max_grid_size = 0;
};

struct ThresholdSummary {
  double threshold = 0.0;
  double mean_count = 0.0;
  int64_t min_count = 0;
  int64_t max_count = 0;
};

// Runs `trials` leave-one-out comparisons. Thresholds must be ascending.
AttackReport attack_trials(std::span<const SurvivalRecord> records,
                           size_t target_index, const DpParams& params,
                           std::span<const double> thresholds, int64_t trials,
                           const StageToggles& toggles = {});

std::vector<ThresholdSummary> summarize(const AttackReport& report);

// Index of the record with the latest event time (first such record on
// ties). Throws kDegenerateDataset when there is no event.
size_t max_time_target(std::span<const SurvivalRecord> records);

// Columns: trial,threshold,influential_count.
void write_attack_csv(const AttackReport& report, std::ostream& out);
// Columns: epsilon,threshold,mean_count,min_count,max_count.
void write_attack_summary_csv(const AttackReport& report, std::ostream& out);

}  // namespace kmdp

#endif  // KMDP_ATTACK_H_
