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

#include "eonsim/presets.h"

#include <cstdlib>
#include <sstream>

namespace eonsim {

namespace {

const std::vector<ExperimentPreset>& Presets() {
  static const std::vector<ExperimentPreset> presets = [] {
    std::vector<ExperimentPreset> p;
    ExperimentPreset deep;
    deep.name = "deeprmsa";
    deep.topologies = {{"nsfnet", "nsfnet"}, {"cost239", "cost239"}};
    deep.fiber_mode = FiberMode::kDual;
    deep.slots_per_fiber = 100;
    deep.truncate_holding = true;
    deep.demand = UniformRate{25, 100, 1};
    deep.modulation = true;
    p.push_back(deep);

    ExperimentPreset reward = deep;
    reward.name = "reward-rmsa";
    p.push_back(reward);

    ExperimentPreset gcn = deep;
    gcn.name = "gcn-rmsa";
    gcn.topologies.push_back({"usnet", "usnet"});
    p.push_back(gcn);

    ExperimentPreset mask;
    mask.name = "maskrsa";
    mask.topologies = {{"nsfnet", "nsfnet"}, {"jpn48", "jpn48"}};
    mask.fiber_mode = FiberMode::kSingle;
    mask.slots_per_fiber = 100;
    mask.truncate_holding = false;
    mask.demand = UniformRate{25, 100, 1};
    mask.modulation = true;
    p.push_back(mask);

    ExperimentPreset ptr40;
    ptr40.name = "ptrnet-40";
    ptr40.topologies = {{"nsfnet", "nsfnet"},
                        {"cost239", "cost239_ptrnet"},
                        {"usnet", "usnet_ptrnet"}};
    ptr40.fiber_mode = FiberMode::kSingle;
    ptr40.slots_per_fiber = 40;
    ptr40.truncate_holding = false;
    ptr40.demand = UniformSlots{{1}};
    ptr40.modulation = false;
    p.push_back(ptr40);

    ExperimentPreset ptr80 = ptr40;
    ptr80.name = "ptrnet-80";
    ptr80.slots_per_fiber = 80;
    ptr80.demand = UniformSlots{{1, 2, 3, 4}};
    p.push_back(ptr80);
    return p;
  }();
  return presets;
}

std::string DescribeDemand(const DemandDistribution& demand) {
  std::ostringstream out;
  if (const auto* rate = std::get_if<UniformRate>(&demand)) {
    out << "rate " << rate->min_gbps << ".." << rate->max_gbps << " Gb/s";
  } else {
    const auto& slots = std::get<UniformSlots>(demand).choices;
    out << "slots ";
    if (slots.size() == 1) {
      out << slots.front();
    } else {
      out << slots.front() << ".." << slots.back();
    }
  }
  return out.str();
}

}  // namespace

std::span<const ExperimentPreset> AllPresets() { return Presets(); }

const ExperimentPreset* FindPreset(std::string_view name) {
  for (const ExperimentPreset& p : Presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::filesystem::path DataDirectory() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("EONSIM_DATA_DIR"); env && *env) {
    return env;
  }
  std::error_code ec;
  if (fs::is_directory(EONSIM_BUILD_DATA_DIR, ec)) return EONSIM_BUILD_DATA_DIR;
  return EONSIM_INSTALL_DATA_DIR;
}

std::filesystem::path ResolveTopologyPath(std::string_view name) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path direct(name);
  if (direct.has_extension() && fs::is_regular_file(direct, ec)) return direct;
  fs::path bundled = DataDirectory() / (std::string(name) + ".json");
  if (fs::is_regular_file(bundled, ec)) return bundled;
  throw ConfigError("unknown topology '" + std::string(name) + "'");
}

std::shared_ptr<const Topology> LoadPresetTopology(
    const ExperimentPreset& preset, std::string_view topology) {
  std::string stem(topology);
  if (stem.empty()) stem = preset.topologies.front().second;
  for (const auto& [label, file] : preset.topologies) {
    if (label == topology) stem = file;
  }
  Topology loaded = LoadTopologyFile(ResolveTopologyPath(stem));
  return std::make_shared<const Topology>(
      loaded.WithFiberMode(preset.fiber_mode)
          .WithSlots(preset.slots_per_fiber));
}

SimConfig MakeConfig(const ExperimentPreset& preset,
                     std::shared_ptr<const Topology> topology) {
  SimConfig config;
  config.topology = std::move(topology);
  config.traffic.mean_holding_time = preset.mean_holding_time;
  config.traffic.demand = preset.demand;
  config.traffic.truncate_holding = preset.truncate_holding;
  config.traffic.pairs = PairModel::kOrdered;
  config.demand.fixed_width = !preset.modulation;
  config.warmup_requests = preset.warmup_requests;
  config.measured_requests = preset.measured_requests;
  config.trials = preset.trials;
  return config;
}

std::vector<PresetCheck> SelfCheck() {
  struct Expected {
    const char* preset;
    const char* fiber;
    const char* slots;
    const char* truncation;
    const char* demand;
    const char* modulation;
  };
  static constexpr Expected kPublished[] = {
      {"deeprmsa", "dual", "100", "on", "rate 25..100 Gb/s", "on"},
      {"reward-rmsa", "dual", "100", "on", "rate 25..100 Gb/s", "on"},
      {"gcn-rmsa", "dual", "100", "on", "rate 25..100 Gb/s", "on"},
      {"maskrsa", "single", "100", "off", "rate 25..100 Gb/s", "on"},
      {"ptrnet-40", "single", "40", "off", "slots 1", "off"},
      {"ptrnet-80", "single", "80", "off", "slots 1..4", "off"},
  };
  std::vector<PresetCheck> checks;
  for (const Expected& e : kPublished) {
    const ExperimentPreset* p = FindPreset(e.preset);
    auto add = [&](const char* setting, const char* expected,
                   std::string resolved) {
      checks.push_back({e.preset, setting, expected, std::move(resolved)});
    };
    if (!p) {
      add("defined", "yes", "no");
      continue;
    }
    add("fiber_mode", e.fiber, std::string(ToString(p->fiber_mode)));
    add("slots", e.slots, std::to_string(p->slots_per_fiber));
    add("truncate_holding", e.truncation, p->truncate_holding ? "on" : "off");
    add("demand", e.demand, DescribeDemand(p->demand));
    add("modulation", e.modulation, p->modulation ? "on" : "off");
    add("warmup_requests", "3000", std::to_string(p->warmup_requests));
    add("measured_requests", "10000", std::to_string(p->measured_requests));
  }
  return checks;
}

}  // namespace eonsim
