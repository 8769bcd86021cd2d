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

#include "kmdp/evaluation.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "kmdp/error.h"
#include "kmdp/io.h"
#include "kmdp/parallel.h"

namespace kmdp {

double rmse(const SurvivalCurve& released, const SurvivalCurve& reference) {
  if (released.times != reference.times ||
      released.probs.size() != reference.probs.size()) {
    throw Error(ErrorCode::kMismatchedGrid,
                "rmse needs curves on the same time grid (" +
                    std::to_string(released.size()) + " vs " +
                    std::to_string(reference.size()) + " points)");
  }
  if (released.empty()) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < released.probs.size(); ++i) {
    const double diff = released.probs[i] - reference.probs[i];
    sum += diff * diff;
  }
  return std::sqrt(sum / static_cast<double>(released.probs.size()));
}

TrialBatch run_trials(const SurvivalCurve& reference, const DpParams& params,
                      int64_t trials) {
  params.Validate();
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidParameter, "trials must be at least 1");
  }
  TrialBatch batch;
  batch.params = params;
  batch.trials = trials;
  batch.rmse_samples.assign(static_cast<size_t>(trials), 0.0);
  parallel_for(trials, [&](int64_t t) {
    const SurvivalCurve released =
        dp_km(reference, params, static_cast<uint64_t>(t));
    batch.rmse_samples[static_cast<size_t>(t)] = rmse(released, reference);
  });
  return batch;
}

TrialBatch run_trials(std::span<const SurvivalRecord> records,
                      const DpParams& params, int64_t trials) {
  return run_trials(fit_km(records), params, trials);
}

double quantile(std::span<const double> samples, double q) {
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "quantile of an empty sample");
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "quantile level outside [0, 1]");
  }
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Interval percentile_ci(std::span<const double> samples, double level) {
  if (samples.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "confidence interval of an empty sample");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "confidence level must lie in (0, 1)");
  }
  const double tail = (1.0 - level) / 2.0;
  return {quantile(samples, tail), quantile(samples, 1.0 - tail)};
}

double mean(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  double sum = 0.0;
  for (double s : samples) sum += s;
  return sum / static_cast<double>(samples.size());
}

SweepResult sweep(std::span<const SurvivalRecord> records,
                  std::span<const DpParams> grid, int64_t trials) {
  if (grid.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "sweep grid is empty");
  }
  const SurvivalCurve reference = fit_km(records);
  SweepResult result;
  result.rows.reserve(grid.size());
  for (const DpParams& params : grid) {
    const TrialBatch batch = run_trials(reference, params, trials);
    result.rows.push_back({params, trials, mean(batch.rmse_samples),
                           percentile_ci(batch.rmse_samples, 0.95)});
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "epsilon,alpha,tau_start,tau_end,window,trials,mean_rmse,ci_lower,"
         "ci_upper\n";
  for (const SweepRow& row : result.rows) {
    out << format_double(row.params.epsilon) << ','
        << format_double(row.params.alpha) << ','
        << format_double(row.params.tau_start) << ','
        << format_double(row.params.tau_end) << ',' << row.params.window << ','
        << row.trials << ',' << format_double(row.mean_rmse) << ','
        << format_double(row.ci.lower) << ',' << format_double(row.ci.upper)
        << '\n';
  }
}

}  // namespace kmdp
