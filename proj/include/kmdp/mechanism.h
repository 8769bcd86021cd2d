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

#ifndef KMDP_MECHANISM_H_
#define KMDP_MECHANISM_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmdp/random.h"
#include "kmdp/survival.h"

namespace kmdp {

// How truncated windows at either end of the curve are normalized.
//   kActualCount: divide by the number of points the window covers.
//   kLiteralW:    always divide by w, which pulls the edges toward zero.
enum class SmoothingMode { kActualCount, kLiteralW };

std::string_view SmoothingModeName(SmoothingMode mode);
// Accepts "actual_count" and "literal_w". Throws kInvalidParameter otherwise.
SmoothingMode ParseSmoothingMode(std::string_view name);

// Mechanism configuration. Defaults are the usual operating point for the
// private curve release; epsilon has no sensible default and must be set.
struct DpParams {
  double epsilon = 1.0;
  double alpha = 0.05;
  double tau_start = 0.95;
  double tau_end = 0.5;
  int window = 3;
  uint64_t seed = 0;
  SmoothingMode smoothing_mode = SmoothingMode::kActualCount;

  // Throws Error(kInvalidParameter) naming the offending field.
  void Validate() const;
};

// Laplace scale for noise step `step` (the sensitivity is fixed at 1):
// 1 / (epsilon * (1 + alpha * step)).
double noise_scale(double epsilon, double alpha, int64_t step);

// Inverse-CDF transform of u in (-1/2, 1/2) to a Laplace(0, scale) variate.
double laplace_from_uniform(double scale, double u);

// Draws one Laplace(0, scale) variate. scale == 0 returns exactly 0 without
// consuming randomness.
double sample_laplace(double scale, RandomStream& rng);

// Linearly decaying cap: tau_start - (i / n) * (tau_start - tau_end) for
// 1 <= i <= n.
double clip_threshold(int64_t i, int64_t n, double tau_start, double tau_end);

// min(max(value, 0), tau).
double clip(double value, double tau);

// Centered rolling mean with half-width floor(w / 2).
std::vector<double> smooth(std::span<const double> values, int window,
                           SmoothingMode mode);

// Running minimum from the left.
std::vector<double> cumulative_min(std::span<const double> values);

// Lets tests switch individual pipeline stages off. A disabled stage passes
// its input through unchanged.
struct StageToggles {
  bool noise = true;
  bool clip = true;
  bool smooth = true;
  bool monotone = true;
};

// Intermediate values of one release, index-aligned with the input curve.
struct ReleaseTrace {
  std::vector<double> noisy;
  std::vector<double> clipped;
  std::vector<double> smoothed;
  std::vector<double> released;
};

// Runs the release pipeline on curve.probs and keeps every stage.
// The k-th released point (k = 1..n) is perturbed with scale
// noise_scale(epsilon, alpha, k - 1) and capped at clip_threshold(k, n).
ReleaseTrace release_trace(const SurvivalCurve& curve, const DpParams& params,
                           RandomStream& rng, const StageToggles& toggles = {});

// Differentially private release of `curve`. Output times equal input times;
// output probabilities are non-increasing and lie in [0, tau(1)].
SurvivalCurve dp_km(const SurvivalCurve& curve, const DpParams& params,
                    RandomStream& rng, const StageToggles& toggles = {});

// Same, drawing from the substream (params.seed, trial).
SurvivalCurve dp_km(const SurvivalCurve& curve, const DpParams& params,
                    uint64_t trial);

struct BudgetReport {
  // per_step[i] = epsilon * (1 + alpha * i), i = 0..n.
  std::vector<double> per_step;
  // epsilon * (n + 1) * (alpha * n / 2 + 1).
  double total = 0.0;
};

// Composed budget of releasing n noisy probabilities. Counts n + 1 terms,
// which over-covers the n terms actually spent.
BudgetReport total_budget(double epsilon, double alpha, int64_t n);

// (1/n) * sum_k 2 * noise_scale(epsilon, alpha, k)^2 over the noise steps the
// mechanism uses for an n-point curve. Zero for n == 0.
double expected_noise_mse(double epsilon, double alpha, int64_t n);

struct BiasTerms {
  double max_clipping_bias = 0.0;   // max |noisy - clipped|
  double max_smoothing_bias = 0.0;  // max |clipped - smoothed|
  double expected_noise_mse = 0.0;
};

// Measures the clipping and smoothing bias over `trials` releases drawn
// sequentially from `rng`.
BiasTerms measure_bias_terms(const SurvivalCurve& true_curve,
                             const DpParams& params, int64_t trials,
                             RandomStream& rng,
                             const StageToggles& toggles = {});

}  // namespace kmdp

#endif  // KMDP_MECHANISM_H_
