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

#ifndef KMDP_SURVIVAL_H_
#define KMDP_SURVIVAL_H_

#include <cstdint>
#include <span>
#include <vector>

namespace kmdp {

// One subject: observed time and whether the event was seen (false means
// right-censored at `time`).
struct SurvivalRecord {
  double time = 0.0;
  bool event = false;

  friend bool operator==(const SurvivalRecord&, const SurvivalRecord&) =
      default;
};

struct RiskRow {
  double time = 0.0;
  int64_t events = 0;   // d_j
  int64_t at_risk = 0;  // n_j

  friend bool operator==(const RiskRow&, const RiskRow&) = default;
};

// Distinct event times in increasing order with their event and at-risk
// counts. Times with only censorings do not appear.
struct RiskTable {
  std::vector<RiskRow> rows;
  int64_t total_records = 0;

  friend bool operator==(const RiskTable&, const RiskTable&) = default;
};

// Right-continuous step function. Before times.front() the curve is 1.
struct SurvivalCurve {
  std::vector<double> times;
  std::vector<double> probs;

  size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }

  friend bool operator==(const SurvivalCurve&, const SurvivalCurve&) = default;
};

// Throws Error(kEmptyDataset) on empty input and Error(kInvalidRecord) naming
// the index of the first negative or non-finite time. A subject censored at
// an event time is still at risk at that time.
RiskTable build_risk_table(std::span<const SurvivalRecord> records);

// Product-limit estimate: probs[i] = prod_{j<=i} (1 - d_j / n_j).
SurvivalCurve fit_km(const RiskTable& table);

// Convenience: build_risk_table followed by fit_km.
SurvivalCurve fit_km(std::span<const SurvivalRecord> records);

// Value of the step function at t; 1 before the first step.
double eval_step(const SurvivalCurve& curve, double t);

}  // namespace kmdp

#endif  // KMDP_SURVIVAL_H_
