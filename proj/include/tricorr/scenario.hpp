// Copyright 2026 The tricorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRICORR_SCENARIO_HPP
#define TRICORR_SCENARIO_HPP

#include <array>
#include <string>
#include <vector>

#include "tricorr/atom.hpp"

namespace tricorr {

enum class RunMode { Trajectory, Sweep };
enum class SweepField { Omega1, Omega2 };

// Inclusive sweep grid: `steps` sample points from start to stop, so the
// spacing is (stop - start) / (steps - 1).
struct SweepRange {
  double start = 0.0;
  double stop = 0.0;
  int steps = 0;
};

struct ScenarioConfig {
  ConfigKind configuration = ConfigKind::Xi;
  DriveParams drive;
  double t_max = 0.0;
  double dt = tol::kDefaultDt;
  double output_stride = tol::kDefaultStride;
  RunMode mode = RunMode::Trajectory;
  SweepField sweep_field = SweepField::Omega2;
  SweepRange sweep_range;
  double fixed_time = 0.0;  // sweep mode only
};

// Parses and validates a JSON run description. Field names are exactly the
// ScenarioConfig members; sweep_range is the array [start, stop, steps].
// Unknown keys, wrong types and out-of-range values raise ConfigError;
// malformed documents raise ConfigError with the offending line.
ScenarioConfig parse_config(const std::string& text);

// One sampled point of a run. `key` is the time for trajectories and the
// swept field value for sweeps. degeneracy_flag marks the computational-
// basis fallback inside the disturbance measure; optimizer_flag marks a
// measurement optimization that did not converge (the value then comes from
// the coarse grid). A `failed` record marks a sweep point whose evolution
// aborted: its numeric fields are NaN and `failure_reason` says why.
struct CorrelationRecord {
  double key = 0.0;
  std::array<double, 4> populations{};
  double survival = 0.0;
  double purity = 0.0;
  double concurrence = 0.0;
  double mid = 0.0;
  double discord = 0.0;
  double work_deficit = 0.0;
  bool degeneracy_flag = false;
  bool optimizer_flag = false;
  bool failed = false;
  std::string failure_reason;
};

// Full evolve -> map -> measure pipeline at every output sample of a
// trajectory configuration. Integration is sequential; the per-sample
// measure evaluations fan out over `threads` workers (the result does not
// depend on the thread count).
std::vector<CorrelationRecord> run_trajectory(const ScenarioConfig& config,
                                              int threads = 1);

// One record per swept field value, each evolved to fixed_time. Points are
// independent; a point whose evolution aborts is recorded as failed and the
// remaining points are still computed.
std::vector<CorrelationRecord> run_sweep(const ScenarioConfig& config,
                                         int threads = 1);

// Fixed CSV schema. Numeric fields are printed with printf "%.17e" so a
// rewrite of identical records is byte-identical.
extern const char kCsvHeader[];

std::string format_csv(const std::vector<CorrelationRecord>& records);

// Writes format_csv(records) to `destination`. Empty record lists are
// invalid; unwritable destinations raise IoError.
void emit_csv(const std::vector<CorrelationRecord>& records,
              const std::string& destination);

// Writes a gnuplot script that renders the correlation curves plus a
// second panel with populations and purity from an already-emitted CSV.
// `key_label` becomes the x-axis label ("t" or the swept field name).
void emit_plot_script(const std::vector<CorrelationRecord>& records,
                      const std::string& csv_path,
                      const std::string& destination,
                      const std::string& key_label);

}  // namespace tricorr

#endif  // TRICORR_SCENARIO_HPP
