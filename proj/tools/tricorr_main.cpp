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

// tricorr: drives a three-level atom, maps the surviving atomic state to a
// two-photon density matrix and tabulates its correlation measures.
//
//   tricorr run --config scenario.json [--out run.csv] [--plot run.gp]
//   tricorr run --preset fig2a [--dt 5e-4] [--threads 4]
//   tricorr presets list
//
// Exit codes: 0 success, 1 configuration error, 2 numerical abort,
// 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tricorr/errors.hpp"
#include "tricorr/presets.hpp"
#include "tricorr/scenario.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tricorr::IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string stem_of(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  std::string name =
      slash == std::string::npos ? path : path.substr(slash + 1);
  const size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

void warn_spa(const tricorr::ScenarioConfig& cfg) {
  using namespace tricorr;
  const AtomConfig atom = make_config(cfg.configuration);
  if (cfg.mode == RunMode::Trajectory) {
    if (!spa_satisfied(atom, cfg.drive))
      std::cerr << "warning: drive strengths violate the single-photon"
                   " regime; emitted-mode structure is degraded\n";
    return;
  }
  const double step =
      (cfg.sweep_range.stop - cfg.sweep_range.start) /
      (cfg.sweep_range.steps - 1);
  int violations = 0;
  for (int i = 0; i < cfg.sweep_range.steps; ++i) {
    DriveParams d = cfg.drive;
    const double value = cfg.sweep_range.start + i * step;
    (cfg.sweep_field == SweepField::Omega1 ? d.omega1 : d.omega2) = value;
    if (!spa_satisfied(atom, d)) ++violations;
  }
  if (violations > 0)
    std::cerr << "warning: " << violations << " of " << cfg.sweep_range.steps
              << " sweep points violate the single-photon regime\n";
}

int run_command(const std::string& config_path, const std::string& preset,
                std::string out_path, const std::string& plot_path,
                double dt_override, int threads) {
  using namespace tricorr;

  ScenarioConfig cfg;
  std::string default_stem;
  if (!preset.empty()) {
    cfg = load_preset(preset);
    default_stem = preset;
  } else {
    cfg = parse_config(read_file(config_path));
    default_stem = stem_of(config_path);
  }
  if (dt_override > 0.0) {
    if (dt_override > tol::kMaxDt) {
      std::ostringstream os;
      os << "--dt must lie in (0, " << tol::kMaxDt << "]";
      throw ConfigError(os.str());
    }
    cfg.dt = dt_override;
  }
  if (threads < 1) throw ConfigError("--threads must be at least 1");

  warn_spa(cfg);

  std::vector<CorrelationRecord> records;
  std::string key_label;
  if (cfg.mode == RunMode::Trajectory) {
    records = run_trajectory(cfg, threads);
    key_label = "t";
  } else {
    records = run_sweep(cfg, threads);
    key_label =
        cfg.sweep_field == SweepField::Omega1 ? "omega1" : "omega2";
    int failed = 0;
    for (const auto& r : records)
      if (r.failed) ++failed;
    if (failed > 0)
      std::cerr << "warning: " << failed
                << " sweep points failed and carry NaN fields\n";
  }

  if (out_path.empty()) out_path = default_stem + ".csv";
  emit_csv(records, out_path);
  std::cout << "wrote " << records.size() << " records to " << out_path
            << "\n";
  if (!plot_path.empty()) {
    emit_plot_script(records, out_path, plot_path, key_label);
    std::cout << "wrote plot script to " << plot_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon correlation simulator for driven three-level atoms"};
  app.require_subcommand(1);

  std::string config_path, preset_name, out_path, plot_path;
  double dt_override = 0.0;
  int threads = 1;

  CLI::App* run = app.add_subcommand("run", "execute a scenario");
  CLI::Option* opt_config =
      run->add_option("--config", config_path, "scenario JSON file");
  CLI::Option* opt_preset =
      run->add_option("--preset", preset_name, "bundled scenario name");
  opt_config->excludes(opt_preset);
  run->add_option("--out", out_path, "CSV destination (default <name>.csv)");
  run->add_option("--plot", plot_path, "gnuplot script destination");
  run->add_option("--dt", dt_override, "integrator step override");
  run->add_option("--threads", threads, "worker threads (default 1)");

  CLI::App* presets = app.add_subcommand("presets", "bundled scenarios");
  CLI::App* presets_list =
      presets->add_subcommand("list", "list bundled scenarios");
  presets->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (presets_list->parsed()) {
      for (const auto& p : tricorr::preset_list())
        std::printf("%-8s %s\n", p.name.c_str(), p.description.c_str());
      return 0;
    }
    if (run->parsed()) {
      if (config_path.empty() && preset_name.empty())
        throw tricorr::ConfigError("run requires --config or --preset");
      return run_command(config_path, preset_name, out_path, plot_path,
                         dt_override, threads);
    }
  } catch (const tricorr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const tricorr::NumericalError& e) {
    std::cerr << "numerical abort: " << e.what() << "\n";
    return 2;
  } catch (const tricorr::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
