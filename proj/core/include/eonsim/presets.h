// Copyright 2026 The eonsim Authors
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

// Problem settings of the recreated case studies.

#ifndef EONSIM_PRESETS_H_
#define EONSIM_PRESETS_H_

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eonsim/simulator.h"

namespace eonsim {

struct ExperimentPreset {
  std::string name;
  // (label, bundled file stem); the first entry is the default topology.
  std::vector<std::pair<std::string, std::string>> topologies;
  FiberMode fiber_mode = FiberMode::kDual;
  int slots_per_fiber = 100;
  bool truncate_holding = false;
  DemandDistribution demand = UniformRate{};
  bool modulation = true;  // false: fixed-width slot demands
  double mean_holding_time = 10.0;
  long long warmup_requests = 3000;
  long long measured_requests = 10000;
  int trials = 10;
};

std::span<const ExperimentPreset> AllPresets();
// Null when unknown.
const ExperimentPreset* FindPreset(std::string_view name);

// Directory with the bundled topology files: $EONSIM_DATA_DIR when set,
// else the source tree, else the install prefix.
std::filesystem::path DataDirectory();

// `name` is a bundled stem ("nsfnet") or a path to a topology file.
// Throws ConfigError when nothing matches.
std::filesystem::path ResolveTopologyPath(std::string_view name);

// Loads `topology` (a preset label, bundled stem or path; empty selects the
// preset default) and applies the preset's fiber mode and slot count.
std::shared_ptr<const Topology> LoadPresetTopology(
    const ExperimentPreset& preset, std::string_view topology);

// Simulation config for `preset` on `topology`: traffic, demand model and
// measurement window. Heuristic, K and ordering keep SimConfig defaults.
SimConfig MakeConfig(const ExperimentPreset& preset,
                     std::shared_ptr<const Topology> topology);

struct PresetCheck {
  std::string preset;
  std::string setting;
  std::string expected;
  std::string resolved;
  bool ok() const { return expected == resolved; }
};

// Resolved preset settings against the published problem settings.
std::vector<PresetCheck> SelfCheck();

}  // namespace eonsim

#endif  // EONSIM_PRESETS_H_
