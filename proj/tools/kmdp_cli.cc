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

// Command-line front end: exact and private Kaplan-Meier fits, budget
// accounting, utility sweeps and the leave-one-out attack.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kmdp/attack.h"
#include "kmdp/error.h"
#include "kmdp/evaluation.h"
#include "kmdp/io.h"
#include "kmdp/mechanism.h"
#include "kmdp/survival.h"

namespace kmdp {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;

constexpr int64_t kDefaultTrials = 500;

int64_t DefaultTrials() {
  const char* env = std::getenv("KMDP_DEFAULT_TRIALS");
  if (env == nullptr || *env == '\0') return kDefaultTrials;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (*end != '\0' || value < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "KMDP_DEFAULT_TRIALS must be a positive integer");
  }
  return value;
}

struct IngestOptions {
  std::string input;
  IngestConfig config;
  std::vector<int64_t> event_codes{2};
  std::vector<int64_t> censored_codes{1};

  void Register(CLI::App* cmd) {
    cmd->add_option("--input", input, "Delimited survival data file")
        ->required();
    cmd->add_option("--time-column", config.time_column);
    cmd->add_option("--status-column", config.status_column);
    cmd->add_option("--event-codes", event_codes, "Status values for events")
        ->delimiter(',');
    cmd->add_option("--censored-codes", censored_codes,
                    "Status values for censoring")
        ->delimiter(',');
    cmd->add_option("--missing-token", config.missing_token);
  }

  std::vector<SurvivalRecord> Load() {
    config.event_codes = {event_codes.begin(), event_codes.end()};
    config.censored_codes = {censored_codes.begin(), censored_codes.end()};
    LoadResult result = load_records(std::filesystem::path(input), config);
    for (const RejectedRow& r : result.rejected) {
      std::cerr << "warning: " << input << ": rejected row " << r.row << " ("
                << r.reason << ")\n";
    }
    return std::move(result.records);
  }
};

struct MechanismOptions {
  DpParams params;
  std::string smoothing_mode = "actual_count";

  void Register(CLI::App* cmd, bool require_epsilon) {
    auto* eps = cmd->add_option("--epsilon", params.epsilon,
                                "Per-step privacy parameter");
    if (require_epsilon) eps->required();
    cmd->add_option("--alpha", params.alpha, "Noise decay factor")
        ->capture_default_str();
    cmd->add_option("--tau-start", params.tau_start)->capture_default_str();
    cmd->add_option("--tau-end", params.tau_end)->capture_default_str();
    cmd->add_option("--window", params.window, "Odd smoothing window")
        ->capture_default_str();
    cmd->add_option("--seed", params.seed)->capture_default_str();
    cmd->add_option("--smoothing-mode", smoothing_mode,
                    "actual_count or literal_w")
        ->capture_default_str();
  }

  DpParams Build() {
    params.smoothing_mode = ParseSmoothingMode(smoothing_mode);
    params.Validate();
    return params;
  }
};

void WriteCurve(const SurvivalCurve& curve, const std::string& out) {
  if (out.empty()) {
    write_curve(curve, std::cout, CurveFormat::kCsv);
  } else {
    export_curve(curve, out, curve_format_for(out));
  }
}

template <typename WriteFn>
void WriteText(const std::string& path, WriteFn&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string SummaryPathFor(const std::string& out) {
  std::filesystem::path p(out);
  return (p.parent_path() / (p.stem().string() + "_summary.csv")).string();
}

size_t ResolveTarget(const std::string& target,
                     std::span<const SurvivalRecord> records) {
  if (target == "max-time") return max_time_target(records);
  size_t consumed = 0;
  long long index = -1;
  try {
    index = std::stoll(target, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != target.size() || index < 0) {
    throw Error(ErrorCode::kInvalidParameter,
                "--target must be a record index or 'max-time', got '" +
                    target + "'");
  }
  return static_cast<size_t>(index);
}

std::vector<double> ParseThresholds(const std::string& text) {
  std::vector<double> out;
  for (const std::string& field : split_csv_line(text, ',')) {
    try {
      size_t consumed = 0;
      out.push_back(std::stod(field, &consumed));
      if (consumed != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidParameter,
                  "--thresholds: cannot parse '" + field + "'");
    }
  }
  return out;
}

int Run(int argc, char** argv) {
  CLI::App app{"Differentially private Kaplan-Meier estimation"};
  app.require_subcommand(1);

  // fit
  IngestOptions fit_in;
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "Exact Kaplan-Meier curve");
  fit_in.Register(fit);
  fit->add_option("--out", fit_out, "Output file (.csv or .json)");

  // dp-fit
  IngestOptions dp_in;
  MechanismOptions dp_mech;
  std::string dp_out;
  auto* dp_fit = app.add_subcommand("dp-fit", "One private curve release");
  dp_in.Register(dp_fit);
  dp_mech.Register(dp_fit, /*require_epsilon=*/true);
  dp_fit->add_option("--out", dp_out, "Output file (.csv or .json)");

  // budget
  double budget_eps = 0.0;
  double budget_alpha = 0.05;
  int64_t budget_n = 0;
  auto* budget = app.add_subcommand("budget", "Composed privacy budget");
  budget->add_option("--epsilon", budget_eps)->required();
  budget->add_option("--alpha", budget_alpha)->capture_default_str();
  budget->add_option("--n", budget_n, "Number of released points")->required();

  // sweep
  IngestOptions sweep_in;
  std::string sweep_grid;
  std::optional<int64_t> sweep_trials;
  std::optional<uint64_t> sweep_seed;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "RMSE over a parameter grid");
  sweep_in.Register(sweep_cmd);
  sweep_cmd->add_option("--grid", sweep_grid, "CSV of parameter rows")
      ->required();
  sweep_cmd->add_option("--trials", sweep_trials);
  sweep_cmd->add_option("--seed", sweep_seed, "Overrides any grid seed");
  sweep_cmd->add_option("--out", sweep_out);

  // attack
  IngestOptions attack_in;
  MechanismOptions attack_mech;
  std::string attack_target = "max-time";
  std::string attack_thresholds = "0.05,0.1,0.5,0.7";
  std::optional<int64_t> attack_trials_opt;
  std::string attack_out;
  std::string attack_summary;
  auto* attack = app.add_subcommand("attack", "Leave-one-out membership test");
  attack_in.Register(attack);
  attack_mech.Register(attack, /*require_epsilon=*/true);
  attack->add_option("--target", attack_target,
                     "Record index or 'max-time'")
      ->capture_default_str();
  attack->add_option("--thresholds", attack_thresholds)->capture_default_str();
  attack->add_option("--trials", attack_trials_opt);
  attack->add_option("--out", attack_out, "Per-trial counts CSV")->required();
  attack->add_option("--summary-out", attack_summary,
                     "Summary CSV (default: <out>_summary.csv)");

  // generate
  SyntheticConfig synth;
  std::string synth_out;
  auto* generate =
      app.add_subcommand("generate", "Synthetic censored dataset");
  generate->add_option("--size", synth.size)->capture_default_str();
  generate->add_option("--event-rate", synth.event_rate)->capture_default_str();
  generate->add_option("--censor-max", synth.censor_max)->capture_default_str();
  generate->add_option("--seed", synth.seed)->capture_default_str();
  generate->add_option("--out", synth_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (*fit) {
    WriteCurve(fit_km(fit_in.Load()), fit_out);
  } else if (*dp_fit) {
    const DpParams params = dp_mech.Build();
    const SurvivalCurve exact = fit_km(dp_in.Load());
    RandomStream rng = RandomStream::ForSubstream(params.seed, {0});
    const SurvivalCurve released = dp_km(exact, params, rng);
    const auto n = static_cast<int64_t>(exact.size());
    const double total =
        n > 0 ? total_budget(params.epsilon, params.alpha, n).total : 0.0;
    std::cerr << "epsilon_hat=" << format_double(total) << " (n=" << n
              << ")\n";
    WriteCurve(released, dp_out);
  } else if (*budget) {
    const BudgetReport report = total_budget(budget_eps, budget_alpha, budget_n);
    std::cout << "step,epsilon\n";
    for (size_t i = 0; i < report.per_step.size(); ++i) {
      std::cout << i << ',' << format_double(report.per_step[i]) << '\n';
    }
    std::cout << "total," << format_double(report.total) << '\n';
  } else if (*sweep_cmd) {
    const std::vector<SurvivalRecord> records = sweep_in.Load();
    std::vector<DpParams> grid = read_grid(sweep_grid, DpParams{});
    if (sweep_seed) {
      for (DpParams& p : grid) p.seed = *sweep_seed;
    }
    const SweepResult result =
        sweep(records, grid, sweep_trials.value_or(DefaultTrials()));
    WriteText(sweep_out,
              [&](std::ostream& os) { write_sweep_csv(result, os); });
  } else if (*attack) {
    const DpParams params = attack_mech.Build();
    const std::vector<SurvivalRecord> records = attack_in.Load();
    const size_t target = ResolveTarget(attack_target, records);
    const std::vector<double> thresholds = ParseThresholds(attack_thresholds);
    const AttackReport report =
        attack_trials(records, target, params, thresholds,
                      attack_trials_opt.value_or(DefaultTrials()));
    WriteText(attack_out,
              [&](std::ostream& os) { write_attack_csv(report, os); });
    WriteText(attack_summary.empty() ? SummaryPathFor(attack_out)
                                     : attack_summary,
              [&](std::ostream& os) { write_attack_summary_csv(report, os); });
  } else if (*generate) {
    const std::vector<SurvivalRecord> records = generate_synthetic(synth);
    WriteText(synth_out,
              [&](std::ostream& os) { write_records(records, os); });
  }
  return kExitOk;
}

}  // namespace
}  // namespace kmdp

int main(int argc, char** argv) {
  try {
    return kmdp::Run(argc, argv);
  } catch (const kmdp::Error& e) {
    std::cerr << "error: " << kmdp::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
    return kmdp::IsValidationError(e.code()) ? kmdp::kExitValidation
                                             : kmdp::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kmdp::kExitInternal;
  }
}
