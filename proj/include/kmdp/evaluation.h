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

#ifndef KMDP_EVALUATION_H_
#define KMDP_EVALUATION_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kmdp/mechanism.h"
#include "kmdp/survival.h"

namespace kmdp {

// Root mean squared pointwise difference. Both curves must share the same
// time grid (Error kMismatchedGrid otherwise). Two empty curves give 0.
double rmse(const SurvivalCurve& released, const SurvivalCurve& reference);

struct TrialBatch {
  DpParams params;
  int64_t trials = 0;
  std::vector<double> rmse_samples;  // indexed by trial
};

// Fits the exact curve once, then releases it `trials` times. Trial t draws
// from substream (params.seed, t). Trials run concurrently; the result does
// not depend on scheduling.
TrialBatch run_trials(std::span<const SurvivalRecord> records,
                      const DpParams& params, int64_t trials);

// Same, starting from an already fitted curve.
TrialBatch run_trials(const SurvivalCurve& reference, const DpParams& params,
                      int64_t trials);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

// Empirical quantile with linear interpolation between order statistics:
// position h = (N - 1) q on the sorted sample.
double quantile(std::span<const double> samples, double q);

// Percentile interval at (1 - level) / 2 and 1 - (1 - level) / 2.
Interval percentile_ci(std::span<const double> samples, double level);

double mean(std::span<const double> samples);

struct SweepRow {
  DpParams params;
  int64_t trials = 0;
  double mean_rmse = 0.0;
  Interval ci;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// One row per grid point, in grid order, with a 95% percentile interval.
SweepResult sweep(std::span<const SurvivalRecord> records,
                  std::span<const DpParams> grid, int64_t trials);

// Columns: epsilon,alpha,tau_start,tau_end,window,trials,mean_rmse,
// ci_lower,ci_upper.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

}  // namespace kmdp

#endif  // KMDP_EVALUATION_H_
