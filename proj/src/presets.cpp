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

#include "tricorr/presets.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tricorr/errors.hpp"

#ifndef TRICORR_PRESET_DIR
#error "TRICORR_PRESET_DIR must point at the checked-in presets directory"
#endif

namespace tricorr {

const std::vector<PresetInfo>& preset_list() {
  static const std::vector<PresetInfo> presets = {
      {"fig2a", "cascade trajectory, omega1=2.0 omega2=1.0, t up to 3.0"},
      {"fig2b", "cascade trajectory, omega1=2.0 omega2=5.0, t up to 3.0"},
      {"fig3a", "cascade sweep of omega2 in [0.1, 5.9], omega1=1.5, t=1.0"},
      {"fig3b", "cascade sweep of omega2 in [0.1, 5.9], omega1=3.5, t=1.0"},
      {"fig4a", "lambda trajectory, omega1=4.0 omega2=5.0, t up to 3.0"},
      {"fig4b", "lambda trajectory, omega1=4.0 omega2=1.0, t up to 3.0"},
      {"fig5", "vee trajectory, omega1=2.0 omega2=4.0, t up to 3.0"},
      {"fig6a", "cascade trajectory, omega1=omega2=2.0, t up to 3.0"},
      {"fig6b", "lambda trajectory, omega1=omega2=2.0, t up to 3.0"},
      {"fig6c", "vee trajectory, omega1=omega2=2.0, t up to 3.0"},
      {"fig6d", "cascade trajectory, omega1=omega2=4.0, t up to 3.0"},
      {"fig6e", "lambda trajectory, omega1=omega2=4.0, t up to 3.0"},
      {"fig6f", "vee trajectory, omega1=omega2=4.0, t up to 3.0"},
  };
  return presets;
}

ScenarioConfig load_preset(const std::string& name) {
  const auto& known = preset_list();
  const bool exists =
      std::any_of(known.begin(), known.end(),
                  [&](const PresetInfo& p) { return p.name == name; });
  if (!exists) {
    std::ostringstream os;
    os << "unknown preset '" << name << "'; available:";
    for (const auto& p : known) os << ' ' << p.name;
    throw ConfigError(os.str());
  }

  const std::string path = std::string(TRICORR_PRESET_DIR) + "/" + name + ".json";
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read preset file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace tricorr
