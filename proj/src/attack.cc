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

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "kmdp/error.h"
#include "kmdp/io.h"
#include "kmdp/parallel.h"

namespace kmdp {

ReleasePair leave_one_out_release(std::span<const SurvivalRecord> records,
                                  size_t target_index, const DpParams& params,
                                  uint64_t trial,
                                  const StageToggles& toggles) {
  if (target_index >= records.size()) {
    throw Error(ErrorCode::kInvalidParameter,
                "target index " + std::to_string(target_index) +
                    " out of range for " + std::to_string(records.size()) +
                    " records");
  }
  std::vector<SurvivalRecord> reduced;
  reduced.reserve(records.size() - 1);
  for (size_t i = 0; i < records.size(); ++i) {
    if (i != target_index) reduced.push_back(records[i]);
  }
  if (std::none_of(reduced.begin(), reduced.end(),
                   [](const SurvivalRecord& r) { return r.event; })) {
    throw Error(ErrorCode::kDegenerateDataset,
                "degenerate dataset: removing record " +
                    std::to_string(target_index) + " leaves no events");
  }

  const SurvivalCurve full = fit_km(records);
  const SurvivalCurve partial = fit_km(reduced);
  RandomStream with_rng = RandomStream::ForSubstream(params.seed, {trial, 0});
  RandomStream without_rng = RandomStream::ForSubstream(params.seed, {trial, 1});
  return {dp_km(full, params, with_rng, toggles),
          dp_km(partial, params, without_rng, toggles)};
}

std::vector<double> union_grid(const SurvivalCurve& a, const SurvivalCurve& b) {
  std::vector<double> grid;
  grid.reserve(a.size() + b.size());
  std::set_union(a.times.begin(), a.times.end(), b.times.begin(),
                 b.times.end(), std::back_inserter(grid));
  return grid;
}

InfluentialPoints influential_points(const SurvivalCurve& a,
                                     const SurvivalCurve& b, double threshold) {
  InfluentialPoints result;
  for (double t : union_grid(a, b)) {
    if (std::abs(eval_step(a, t) - eval_step(b, t)) > threshold) {
      result.times.push_back(t);
    }
  }
  result.count = static_cast<int64_t>(result.times.size());
  return result;
}

AttackReport attack_trials(std::span<const SurvivalRecord> records,
                           size_t target_index, const DpParams& params,
                           std::span<const double> thresholds, int64_t trials,
                           const StageToggles& toggles) {
  params.Validate();
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw Error(ErrorCode::kInvalidParameter,
                "thresholds must be sorted ascending");
  }
  if (trials < 0) {
    throw Error(ErrorCode::kInvalidParameter, "trials must be non-negative");
  }

  AttackReport report;
  report.target_index = target_index;
  report.epsilon = params.epsilon;
  report.thresholds.assign(thresholds.begin(), thresholds.end());
  report.per_trial_counts.assign(static_cast<size_t>(trials), {});
  std::vector<std::vector<double>> grids(static_cast<size_t>(trials));

  parallel_for(trials, [&](int64_t t) {
    const ReleasePair pair = leave_one_out_release(
        records, target_index, params, static_cast<uint64_t>(t), toggles);
    std::vector<double> grid = union_grid(pair.with_target, pair.without_target);
    std::vector<double> diffs;
    diffs.reserve(grid.size());
    for (double time : grid) {
      diffs.push_back(std::abs(eval_step(pair.with_target, time) -
                               eval_step(pair.without_target, time)));
    }
    auto& counts = report.per_trial_counts[static_cast<size_t>(t)];
    counts.reserve(thresholds.size());
    for (double threshold : thresholds) {
      counts.push_back(std::count_if(diffs.begin(), diffs.end(),
                                     [&](double d) { return d > threshold; }));
    }
    grids[static_cast<size_t>(t)] = std::move(grid);
  });

  for (const auto& grid : grids) {
    report.max_grid_size =
        std::max(report.max_grid_size, static_cast<int64_t>(grid.size()));
  }
  if (!grids.empty()) report.union_grid = std::move(grids.front());
  return report;
}

std::vector<ThresholdSummary> summarize(const AttackReport& report) {
  std::vector<ThresholdSummary> out;
  for (size_t k = 0; k < report.thresholds.size(); ++k) {
    ThresholdSummary s;
    s.threshold = report.thresholds[k];
    if (!report.per_trial_counts.empty()) {
      s.min_count = std::numeric_limits<int64_t>::max();
      double sum = 0.0;
      for (const auto& counts : report.per_trial_counts) {
        s.min_count = std::min(s.min_count, counts[k]);
        s.max_count = std::max(s.max_count, counts[k]);
        sum += static_cast<double>(counts[k]);
      }
      s.mean_count = sum / static_cast<double>(report.per_trial_counts.size());
    }
    out.push_back(s);
  }
  return out;
}

size_t max_time_target(std::span<const SurvivalRecord> records) {
  size_t best = records.size();
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].event &&
        (best == records.size() || records[i].time > records[best].time)) {
      best = i;
    }
  }
  if (best == records.size()) {
    throw Error(ErrorCode::kDegenerateDataset,
                "degenerate dataset: no event to target");
  }
  return best;
}

void write_attack_csv(const AttackReport& report, std::ostream& out) {
  out << "trial,threshold,influential_count\n";
  for (size_t t = 0; t < report.per_trial_counts.size(); ++t) {
    for (size_t k = 0; k < report.thresholds.size(); ++k) {
      out << t << ',' << format_double(report.thresholds[k]) << ','
          << report.per_trial_counts[t][k] << '\n';
    }
  }
}

void write_attack_summary_csv(const AttackReport& report, std::ostream& out) {
  out << "epsilon,threshold,mean_count,min_count,max_count\n";
  for (const ThresholdSummary& s : summarize(report)) {
    out << format_double(report.epsilon) << ',' << format_double(s.threshold)
        << ',' << format_double(s.mean_count) << ',' << s.min_count << ','
        << s.max_count << '\n';
  }
}

}  // namespace kmdp
