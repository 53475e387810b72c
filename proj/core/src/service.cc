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

#include "eonsim/service.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eonsim {

ModulationTable ModulationTable::Default() {
  return ModulationTable({{"BPSK", 1, 10000.0},
                          {"QPSK", 2, 2500.0},
                          {"8QAM", 3, 1250.0},
                          {"16QAM", 4, 625.0}});
}

ModulationTable::ModulationTable(std::vector<ModulationFormat> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("empty modulation table");
  std::sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
    return a.bits_per_symbol < b.bits_per_symbol;
  });
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].bits_per_symbol < 1 || !(rows_[i].max_reach_km > 0.0)) {
      throw std::invalid_argument("modulation rows need positive bits and reach");
    }
    if (i > 0 && (rows_[i].bits_per_symbol == rows_[i - 1].bits_per_symbol ||
                  rows_[i].max_reach_km >= rows_[i - 1].max_reach_km)) {
      throw std::invalid_argument(
          "modulation reach must strictly decrease with bits per symbol");
    }
  }
}

std::optional<ModulationFormat> SelectModulation(const ModulationTable& table,
                                                 double length_km) {
  if (!(length_km > 0.0)) throw std::invalid_argument("length must be positive");
  const auto& rows = table.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->max_reach_km >= length_km) return *it;
  }
  return std::nullopt;
}

int SlotsRequired(double rate_gbps, int bits_per_symbol, double slot_width_ghz,
                  double overhead) {
  if (!(rate_gbps > 0.0) || bits_per_symbol < 1 || !(slot_width_ghz > 0.0) ||
      !(overhead > 0.0)) {
    throw std::invalid_argument("slot computation needs positive inputs");
  }
  double exact = rate_gbps * overhead / (slot_width_ghz * bits_per_symbol);
  // Absorb rounding noise so exact multiples do not round up.
  return std::max(1, static_cast<int>(std::ceil(exact - 1e-9)));
}

std::optional<SlotDemand> ComputeDemand(const DemandModel& model,
                                        const Demand& demand,
                                        double length_km) {
  if (model.fixed_width) {
    const auto* fixed = std::get_if<FixedSlots>(&demand);
    if (!fixed) {
      throw std::invalid_argument("fixed-width model needs slot demands");
    }
    return SlotDemand{fixed->slots + model.guard_slots, std::nullopt};
  }
  const auto* rate = std::get_if<DataRate>(&demand);
  if (!rate) throw std::invalid_argument("modulated model needs rate demands");
  auto format = SelectModulation(model.modulation, length_km);
  if (!format) return std::nullopt;
  int slots = SlotsRequired(rate->gbps, format->bits_per_symbol,
                            model.slot_width_ghz, model.overhead);
  return SlotDemand{slots + model.guard_slots, std::move(format)};
}

CandidateEvaluation EvaluateCandidate(const CandidatePath& path,
                                      const ServiceRequest& request,
                                      const NetworkState& state,
                                      const DemandModel& model, unsigned scores,
                                      CongestionMetric congestion) {
  CandidateEvaluation eval;
  eval.demand = ComputeDemand(model, request.demand, path.length_km);
  if (!eval.demand) return eval;
  const int slots = eval.demand->slots;

  if (scores & kScoreCongestion) {
    eval.congestion = PathCongestion(state, path.fibers, congestion);
  }
  if (slots > state.slots_per_fiber()) return eval;

  SlotMask free = PathFreeMask(state, path.fibers);
  if (scores & (kScoreFirstFit | kScoreEntropy)) {
    eval.first_fit = FirstFit(free, slots);
  }
  if (scores & kScoreBestFit) eval.best_fit = BestFit(free, slots);
  if ((scores & kScoreEntropy) && eval.first_fit) {
    for (FiberId f : path.fibers) {
      SlotMask after = state.grid(f).free_mask();
      after.SetOccupied(eval.first_fit->start, eval.first_fit->size);
      eval.entropy_after_first_fit += FragmentationEntropy(after);
    }
  }
  return eval;
}

}  // namespace eonsim
