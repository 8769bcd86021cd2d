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

#include "kmdp/mechanism.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kmdp/error.h"

namespace kmdp {
namespace {

[[noreturn]] void InvalidParameter(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, message);
}

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    InvalidParameter("epsilon must be positive and finite, got " +
                     std::to_string(epsilon));
  }
}

void CheckAlpha(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    InvalidParameter("alpha must be non-negative and finite, got " +
                     std::to_string(alpha));
  }
}

}  // namespace

std::string_view SmoothingModeName(SmoothingMode mode) {
  switch (mode) {
    case SmoothingMode::kActualCount:
      return "actual_count";
    case SmoothingMode::kLiteralW:
      return "literal_w";
  }
  return "actual_count";
}

SmoothingMode ParseSmoothingMode(std::string_view name) {
  if (name == "actual_count") return SmoothingMode::kActualCount;
  if (name == "literal_w") return SmoothingMode::kLiteralW;
  InvalidParameter("smoothing mode must be actual_count or literal_w, got '" +
                   std::string(name) + "'");
}

void DpParams::Validate() const {
  CheckEpsilon(epsilon);
  CheckAlpha(alpha);
  if (!(tau_start > 0.0 && tau_start <= 1.0)) {
    InvalidParameter("tau_start must lie in (0, 1], got " +
                     std::to_string(tau_start));
  }
  if (!(tau_end >= 0.0 && tau_end <= tau_start)) {
    InvalidParameter("tau_end must lie in [0, tau_start], got " +
                     std::to_string(tau_end));
  }
  if (window < 1 || window % 2 == 0) {
    InvalidParameter("window must be a positive odd integer, got " +
                     std::to_string(window));
  }
}

double noise_scale(double epsilon, double alpha, int64_t step) {
  CheckEpsilon(epsilon);
  CheckAlpha(alpha);
  if (step < 0) InvalidParameter("noise step must be non-negative");
  return 1.0 / (epsilon * (1.0 + alpha * static_cast<double>(step)));
}

double laplace_from_uniform(double scale, double u) {
  if (scale == 0.0) return 0.0;
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(u));
}

double sample_laplace(double scale, RandomStream& rng) {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    InvalidParameter("Laplace scale must be non-negative and finite, got " +
                     std::to_string(scale));
  }
  if (scale == 0.0) return 0.0;
  return laplace_from_uniform(scale, rng.NextOpenUnit() - 0.5);
}

double clip_threshold(int64_t i, int64_t n, double tau_start, double tau_end) {
  if (n < 1 || i < 1 || i > n) {
    InvalidParameter("clip step " + std::to_string(i) + " outside [1, " +
                     std::to_string(n) + "]");
  }
  if (i == n) return tau_end;
  return tau_start - (static_cast<double>(i) / static_cast<double>(n)) *
                         (tau_start - tau_end);
}

double clip(double value, double tau) {
  return std::min(std::max(value, 0.0), tau);
}

std::vector<double> smooth(std::span<const double> values, int window,
                           SmoothingMode mode) {
  if (values.empty()) InvalidParameter("cannot smooth an empty series");
  if (window < 1) InvalidParameter("window must be at least 1");

  const auto n = static_cast<int64_t>(values.size());
  const int64_t half = window / 2;
  std::vector<double> out(values.size());
  for (int64_t i = 0; i < n; ++i) {
    const int64_t lo = std::max<int64_t>(0, i - half);
    const int64_t hi = std::min<int64_t>(n - 1, i + half);
    double sum = 0.0;
    for (int64_t j = lo; j <= hi; ++j) sum += values[j];
    const double divisor = mode == SmoothingMode::kActualCount
                               ? static_cast<double>(hi - lo + 1)
                               : static_cast<double>(window);
    out[i] = sum / divisor;
  }
  return out;
}

std::vector<double> cumulative_min(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  for (size_t i = 1; i < out.size(); ++i) out[i] = std::min(out[i], out[i - 1]);
  return out;
}

ReleaseTrace release_trace(const SurvivalCurve& curve, const DpParams& params,
                           RandomStream& rng, const StageToggles& toggles) {
  params.Validate();
  ReleaseTrace trace;
  const auto n = static_cast<int64_t>(curve.probs.size());
  if (n == 0) return trace;

  trace.noisy.resize(n);
  trace.clipped.resize(n);
  for (int64_t k = 0; k < n; ++k) {
    double value = curve.probs[k];
    if (toggles.noise) {
      value += sample_laplace(noise_scale(params.epsilon, params.alpha, k), rng);
    }
    trace.noisy[k] = value;
    trace.clipped[k] =
        toggles.clip
            ? clip(value, clip_threshold(k + 1, n, params.tau_start,
                                         params.tau_end))
            : value;
  }
  trace.smoothed = toggles.smooth
                       ? smooth(trace.clipped, params.window,
                                params.smoothing_mode)
                       : trace.clipped;
  trace.released =
      toggles.monotone ? cumulative_min(trace.smoothed) : trace.smoothed;
  return trace;
}

SurvivalCurve dp_km(const SurvivalCurve& curve, const DpParams& params,
                    RandomStream& rng, const StageToggles& toggles) {
  ReleaseTrace trace = release_trace(curve, params, rng, toggles);
  return SurvivalCurve{curve.times, std::move(trace.released)};
}

SurvivalCurve dp_km(const SurvivalCurve& curve, const DpParams& params,
                    uint64_t trial) {
  RandomStream rng = RandomStream::ForSubstream(params.seed, {trial});
  return dp_km(curve, params, rng);
}

BudgetReport total_budget(double epsilon, double alpha, int64_t n) {
  CheckEpsilon(epsilon);
  CheckAlpha(alpha);
  if (n < 1) InvalidParameter("step count n must be at least 1");

  BudgetReport report;
  report.per_step.reserve(static_cast<size_t>(n) + 1);
  for (int64_t i = 0; i <= n; ++i) {
    report.per_step.push_back(epsilon * (1.0 + alpha * static_cast<double>(i)));
  }
  const auto nd = static_cast<double>(n);
  report.total = epsilon * (nd + 1.0) * (alpha * nd / 2.0 + 1.0);
  return report;
}

double expected_noise_mse(double epsilon, double alpha, int64_t n) {
  if (n <= 0) return 0.0;
  double sum = 0.0;
  for (int64_t k = 0; k < n; ++k) {
    const double scale = noise_scale(epsilon, alpha, k);
    sum += 2.0 * scale * scale;
  }
  return sum / static_cast<double>(n);
}

BiasTerms measure_bias_terms(const SurvivalCurve& true_curve,
                             const DpParams& params, int64_t trials,
                             RandomStream& rng, const StageToggles& toggles) {
  if (trials < 1) InvalidParameter("trials must be at least 1");
  BiasTerms terms;
  terms.expected_noise_mse =
      expected_noise_mse(params.epsilon, params.alpha,
                         static_cast<int64_t>(true_curve.size()));
  for (int64_t t = 0; t < trials; ++t) {
    const ReleaseTrace trace = release_trace(true_curve, params, rng, toggles);
    for (size_t i = 0; i < trace.noisy.size(); ++i) {
      terms.max_clipping_bias = std::max(
          terms.max_clipping_bias, std::abs(trace.noisy[i] - trace.clipped[i]));
      terms.max_smoothing_bias =
          std::max(terms.max_smoothing_bias,
                   std::abs(trace.clipped[i] - trace.smoothed[i]));
    }
  }
  return terms;
}

}  // namespace kmdp
