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

#include "kmdp/survival.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kmdp/error.h"

namespace kmdp {

RiskTable build_risk_table(std::span<const SurvivalRecord> records) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "empty dataset: no records");
  }
  for (size_t i = 0; i < records.size(); ++i) {
    const double t = records[i].time;
    if (!std::isfinite(t) || t < 0.0) {
      throw Error(ErrorCode::kInvalidRecord,
                  "record " + std::to_string(i) +
                      ": time must be finite and non-negative");
    }
  }

  std::vector<SurvivalRecord> sorted(records.begin(), records.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const SurvivalRecord& a, const SurvivalRecord& b) {
              return a.time < b.time;
            });

  RiskTable table;
  table.total_records = static_cast<int64_t>(sorted.size());
  int64_t at_risk = table.total_records;
  size_t i = 0;
  while (i < sorted.size()) {
    const double t = sorted[i].time;
    int64_t events = 0;
    int64_t leaving = 0;
    for (; i < sorted.size() && sorted[i].time == t; ++i) {
      if (sorted[i].event) ++events;
      ++leaving;
    }
    if (events > 0) table.rows.push_back({t, events, at_risk});
    at_risk -= leaving;
  }
  return table;
}

SurvivalCurve fit_km(const RiskTable& table) {
  SurvivalCurve curve;
  curve.times.reserve(table.rows.size());
  curve.probs.reserve(table.rows.size());
  double survival = 1.0;
  for (const RiskRow& row : table.rows) {
    survival *= 1.0 - static_cast<double>(row.events) /
                          static_cast<double>(row.at_risk);
    curve.times.push_back(row.time);
    curve.probs.push_back(survival);
  }
  return curve;
}

SurvivalCurve fit_km(std::span<const SurvivalRecord> records) {
  return fit_km(build_risk_table(records));
}

double eval_step(const SurvivalCurve& curve, double t) {
  auto it = std::upper_bound(curve.times.begin(), curve.times.end(), t);
  if (it == curve.times.begin()) return 1.0;
  return curve.probs[static_cast<size_t>(it - curve.times.begin()) - 1];
}

}  // namespace kmdp
