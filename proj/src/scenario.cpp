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

#include "tricorr/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tricorr/correlations.hpp"
#include "tricorr/errors.hpp"
#include "tricorr/photon.hpp"

namespace tricorr {

namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, size_t byte) {
  int line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

double number_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) {
    std::ostringstream os;
    os << "key '" << key << "': expected a number";
    throw ConfigError(os.str());
  }
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number_field(j, key) : fallback;
}

std::string string_field(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_string()) {
    std::ostringstream os;
    os << "key '" << key << "': expected a string";
    throw ConfigError(os.str());
  }
  return v.get<std::string>();
}

[[noreturn]] void bad_value(const char* key, const std::string& detail) {
  std::ostringstream os;
  os << "key '" << key << "': " << detail;
  throw ConfigError(os.str());
}

constexpr const char* kKnownKeys[] = {
    "configuration", "omega1",      "omega2",     "phi1",
    "phi2",          "delta1",      "delta2",     "t_max",
    "dt",            "output_stride", "mode",     "sweep_field",
    "sweep_range",   "fixed_time"};

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "malformed configuration at line " << line_of_byte(text, e.byte)
       << ": " << e.what();
    throw ConfigError(os.str());
  }
  if (!doc.is_object())
    throw ConfigError("configuration document must be a JSON object");

  for (const auto& item : doc.items()) {
    const bool known =
        std::any_of(std::begin(kKnownKeys), std::end(kKnownKeys),
                    [&](const char* k) { return item.key() == k; });
    if (!known) {
      std::ostringstream os;
      os << "unknown key '" << item.key() << "'";
      throw ConfigError(os.str());
    }
  }

  ScenarioConfig cfg;

  if (!doc.contains("configuration"))
    throw ConfigError("missing required key 'configuration'");
  const std::string kind = string_field(doc, "configuration");
  if (kind == "xi")
    cfg.configuration = ConfigKind::Xi;
  else if (kind == "lambda")
    cfg.configuration = ConfigKind::Lambda;
  else if (kind == "v")
    cfg.configuration = ConfigKind::V;
  else
    bad_value("configuration", "must be one of xi, lambda, v");

  if (!doc.contains("t_max"))
    throw ConfigError("missing required key 't_max'");
  cfg.t_max = number_field(doc, "t_max");
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max))
    bad_value("t_max", "must be positive");

  cfg.drive.omega1 = number_or(doc, "omega1", 0.0);
  cfg.drive.omega2 = number_or(doc, "omega2", 0.0);
  if (cfg.drive.omega1 < 0.0) bad_value("omega1", "must be non-negative");
  if (cfg.drive.omega2 < 0.0) bad_value("omega2", "must be non-negative");
  cfg.drive.phi1 = number_or(doc, "phi1", 0.0);
  cfg.drive.phi2 = number_or(doc, "phi2", 0.0);
  cfg.drive.delta1 = number_or(doc, "delta1", 0.0);
  cfg.drive.delta2 = number_or(doc, "delta2", 0.0);
  for (double v : {cfg.drive.phi1, cfg.drive.phi2, cfg.drive.delta1,
                   cfg.drive.delta2}) {
    if (!std::isfinite(v))
      throw ConfigError("phases and detunings must be finite");
  }

  cfg.dt = number_or(doc, "dt", tol::kDefaultDt);
  if (!(cfg.dt > 0.0) || cfg.dt > tol::kMaxDt) {
    std::ostringstream os;
    os << "must lie in (0, " << tol::kMaxDt << "]";
    bad_value("dt", os.str());
  }
  cfg.output_stride = number_or(doc, "output_stride", tol::kDefaultStride);
  if (!(cfg.output_stride > 0.0)) bad_value("output_stride", "must be positive");

  std::string mode = "trajectory";
  if (doc.contains("mode")) mode = string_field(doc, "mode");
  if (mode == "trajectory") {
    cfg.mode = RunMode::Trajectory;
  } else if (mode == "sweep") {
    cfg.mode = RunMode::Sweep;
  } else {
    bad_value("mode", "must be trajectory or sweep");
  }

  if (cfg.mode == RunMode::Sweep) {
    std::string field = "omega2";
    if (doc.contains("sweep_field")) field = string_field(doc, "sweep_field");
    if (field == "omega1")
      cfg.sweep_field = SweepField::Omega1;
    else if (field == "omega2")
      cfg.sweep_field = SweepField::Omega2;
    else
      bad_value("sweep_field", "must be omega1 or omega2");

    if (!doc.contains("sweep_range"))
      throw ConfigError("sweep mode requires key 'sweep_range'");
    const auto& range = doc.at("sweep_range");
    if (!range.is_array() || range.size() != 3 || !range[0].is_number() ||
        !range[1].is_number() || !range[2].is_number())
      bad_value("sweep_range", "must be the array [start, stop, steps]");
    cfg.sweep_range.start = range[0].get<double>();
    cfg.sweep_range.stop = range[1].get<double>();
    const double steps_real = range[2].get<double>();
    if (steps_real != std::floor(steps_real))
      bad_value("sweep_range", "steps must be an integer");
    cfg.sweep_range.steps = static_cast<int>(steps_real);
    if (cfg.sweep_range.steps < 2)
      bad_value("sweep_range", "steps must be at least 2");
    if (cfg.sweep_range.start < 0.0 || cfg.sweep_range.stop < 0.0)
      bad_value("sweep_range", "swept Rabi magnitudes must be non-negative");

    if (!doc.contains("fixed_time"))
      throw ConfigError("sweep mode requires key 'fixed_time'");
    cfg.fixed_time = number_field(doc, "fixed_time");
    if (!(cfg.fixed_time > 0.0)) bad_value("fixed_time", "must be positive");
    if (cfg.fixed_time > cfg.t_max)
      bad_value("fixed_time", "must not exceed t_max");
  }
  // Trajectory mode ignores any sweep keys that are present.

  return cfg;
}

namespace {

CorrelationRecord measure_state(double key, const Mat& atomic_state) {
  const TwoPhotonState ph = atomic_to_photon(atomic_state);
  const CorrelationSet set = evaluate_all(ph.rho);
  CorrelationRecord rec;
  rec.key = key;
  rec.populations = populations(ph);
  rec.survival = ph.survival;
  rec.purity = purity(ph);
  rec.concurrence = set.concurrence;
  rec.mid = set.mid;
  rec.discord = set.discord;
  rec.work_deficit = set.work_deficit;
  rec.degeneracy_flag = set.degenerate_marginal;
  rec.optimizer_flag = !set.optimizer_converged;
  return rec;
}

// Runs `work(i)` for i in [0, n) over `threads` workers with strided
// assignment. The first exception, if any, is rethrown on the caller.
void parallel_for(int n, int threads, const std::function<void(int)>& work) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) work(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += threads) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<CorrelationRecord> run_trajectory(const ScenarioConfig& config,
                                              int threads) {
  if (config.mode != RunMode::Trajectory)
    throw std::invalid_argument("run_trajectory: config mode is not trajectory");
  const AtomConfig atom = make_config(config.configuration);
  EvolveOptions opts;
  opts.dt = config.dt;
  opts.output_stride = config.output_stride;
  const Trajectory traj = evolve(atom, config.drive, config.t_max, opts);

  const int n = static_cast<int>(traj.times.size());
  std::vector<CorrelationRecord> records(n);
  parallel_for(n, threads, [&](int i) {
    records[i] = measure_state(traj.times[i], traj.states[i]);
  });
  return records;
}

std::vector<CorrelationRecord> run_sweep(const ScenarioConfig& config,
                                         int threads) {
  if (config.mode != RunMode::Sweep)
    throw std::invalid_argument("run_sweep: config mode is not sweep");
  const AtomConfig atom = make_config(config.configuration);
  const int n = config.sweep_range.steps;
  const double step =
      (config.sweep_range.stop - config.sweep_range.start) / (n - 1);

  std::vector<CorrelationRecord> records(n);
  parallel_for(n, threads, [&](int i) {
    const double value = config.sweep_range.start + i * step;
    DriveParams drive = config.drive;
    if (config.sweep_field == SweepField::Omega1)
      drive.omega1 = value;
    else
      drive.omega2 = value;
    try {
      EvolveOptions opts;
      opts.dt = config.dt;
      // Only the final state matters; sample exactly at fixed_time. The
      // step count and arithmetic match a trajectory run sampled there.
      opts.output_stride = config.fixed_time;
      const Trajectory traj = evolve(atom, drive, config.fixed_time, opts);
      records[i] = measure_state(value, traj.states.back());
    } catch (const NumericalError& e) {
      records[i] = CorrelationRecord{};
      records[i].key = value;
      records[i].failed = true;
      records[i].failure_reason = e.what();
    } catch (const std::invalid_argument& e) {
      // The pipeline rejects states that decayed or degraded past its
      // admissibility gates; for a sweep that is a per-point failure.
      records[i] = CorrelationRecord{};
      records[i].key = value;
      records[i].failed = true;
      records[i].failure_reason = e.what();
    }
  });
  return records;
}

const char kCsvHeader[] =
    "key,pop00,pop01,pop10,pop11,survival,purity,concurrence,mid,discord,"
    "work_deficit,degeneracy_flag,optimizer_flag";

namespace {

void append_field(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17e", v);
  out += ',';
  out += buf;
}

}  // namespace

std::string format_csv(const std::vector<CorrelationRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("format_csv: empty record list");
  std::string out = kCsvHeader;
  out += '\n';
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : records) {
    char key[32];
    std::snprintf(key, sizeof(key), "%.17e", r.key);
    out += key;
    const bool bad = r.failed;
    for (double p : r.populations) append_field(out, bad ? nan : p);
    append_field(out, bad ? nan : r.survival);
    append_field(out, bad ? nan : r.purity);
    append_field(out, bad ? nan : r.concurrence);
    append_field(out, bad ? nan : r.mid);
    append_field(out, bad ? nan : r.discord);
    append_field(out, bad ? nan : r.work_deficit);
    out += r.degeneracy_flag ? ",1" : ",0";
    out += r.optimizer_flag ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

void emit_csv(const std::vector<CorrelationRecord>& records,
              const std::string& destination) {
  const std::string body = format_csv(records);
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("emit_csv: cannot open '" + destination + "'");
  out << body;
  out.flush();
  if (!out) throw IoError("emit_csv: write to '" + destination + "' failed");
}

void emit_plot_script(const std::vector<CorrelationRecord>& records,
                      const std::string& csv_path,
                      const std::string& destination,
                      const std::string& key_label) {
  if (records.empty())
    throw std::invalid_argument("emit_plot_script: empty record list");

  std::string png = destination;
  const size_t dot = png.find_last_of('.');
  const size_t slash = png.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    png.resize(dot);
  png += ".png";

  std::ostringstream os;
  os << "# correlation curves and population/purity panel\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 1000,800\n"
     << "set output '" << png << "'\n"
     << "set grid\n"
     << "set key outside\n"
     << "set multiplot layout 2,1\n"
     << "set xlabel '" << key_label << "'\n"
     << "set ylabel 'correlation'\n"
     << "plot '" << csv_path << "' using 1:8 with lines lw 2 title 'concurrence', \\\n"
     << "     '' using 1:9 with lines lw 2 title 'MID', \\\n"
     << "     '' using 1:10 with lines lw 2 title 'discord', \\\n"
     << "     '' using 1:11 with lines lw 2 title 'work deficit'\n"
     << "set ylabel 'population / purity'\n"
     << "plot '" << csv_path << "' using 1:2 with lines title 'pop00', \\\n"
     << "     '' using 1:3 with lines title 'pop01', \\\n"
     << "     '' using 1:4 with lines title 'pop10', \\\n"
     << "     '' using 1:5 with lines title 'pop11', \\\n"
     << "     '' using 1:7 with lines lw 2 title 'purity'\n"
     << "unset multiplot\n"
     << "unset output\n";

  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("emit_plot_script: cannot open '" + destination + "'");
  out << os.str();
  out.flush();
  if (!out)
    throw IoError("emit_plot_script: write to '" + destination + "' failed");
}

}  // namespace tricorr
