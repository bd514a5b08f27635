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

#ifndef TRICORR_PRESETS_HPP
#define TRICORR_PRESETS_HPP

#include <string>
#include <vector>

#include "tricorr/scenario.hpp"

namespace tricorr {

// Checked-in reproduction scenarios. Each name corresponds to one
// presets/<name>.json file shipped with the source tree.
struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_list();

// Loads and parses a preset by name. Unknown names raise ConfigError;
// unreadable preset files raise IoError.
ScenarioConfig load_preset(const std::string& name);

}  // namespace tricorr

#endif  // TRICORR_PRESETS_HPP
