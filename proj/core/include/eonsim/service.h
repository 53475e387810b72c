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

// Distance-adaptive modulation and per-path slot demand.

#ifndef EONSIM_SERVICE_H_
#define EONSIM_SERVICE_H_

#include <optional>
#include <string>
#include <vector>

#include "eonsim/spectrum.h"
#include "eonsim/topology.h"
#include "eonsim/traffic.h"

namespace eonsim {

struct ModulationFormat {
  std::string name;
  int bits_per_symbol = 0;
  double max_reach_km = 0.0;
  bool operator==(const ModulationFormat&) const = default;
};

class ModulationTable {
 public:
  // BPSK 10000 km, QPSK 2500 km, 8QAM 1250 km, 16QAM 625 km.
  static ModulationTable Default();

  // Rows in any order; stored by ascending bits_per_symbol. Throws
  // std::invalid_argument unless reach is positive and strictly decreasing
  // as bits_per_symbol increases.
  explicit ModulationTable(std::vector<ModulationFormat> rows);

  const std::vector<ModulationFormat>& rows() const { return rows_; }

 private:
  std::vector<ModulationFormat> rows_;
};

// Highest-order format whose reach covers `length_km` (inclusive).
std::optional<ModulationFormat> SelectModulation(const ModulationTable& table,
                                                 double length_km);

// ceil(rate * overhead / (slot_width * bits_per_symbol)).
int SlotsRequired(double rate_gbps, int bits_per_symbol,
                  double slot_width_ghz = 12.5, double overhead = 1.0);

// How a request's demand turns into slots on a given path.
struct DemandModel {
  // Fixed-width mode ignores the modulation table: FixedSlots demands are
  // used as-is. Rate demands require fixed_width == false.
  bool fixed_width = false;
  ModulationTable modulation = ModulationTable::Default();
  double slot_width_ghz = 12.5;
  double overhead = 1.0;
  int guard_slots = 0;
};

struct SlotDemand {
  int slots = 0;
  std::optional<ModulationFormat> modulation;  // empty in fixed-width mode
};

// Slot demand of `demand` on a path of `length_km`; empty when no
// modulation format reaches that far. Throws std::invalid_argument when the
// demand kind does not match the model.
std::optional<SlotDemand> ComputeDemand(const DemandModel& model,
                                        const Demand& demand,
                                        double length_km);

// Scores a heuristic may ask for; evaluation skips the rest.
enum ScoreFlags : unsigned {
  kScoreFirstFit = 1u << 0,
  kScoreBestFit = 1u << 1,
  kScoreEntropy = 1u << 2,  // implies first fit
  kScoreCongestion = 1u << 3,
  kScoreAll = 0xfu,
};

struct CandidateEvaluation {
  std::optional<SlotDemand> demand;
  std::optional<SlotBlock> first_fit;
  std::optional<BestFitBlock> best_fit;
  // Sum over path fibers of the fragmentation entropy after placing the
  // first-fit block; only meaningful when first_fit is set.
  double entropy_after_first_fit = 0.0;
  double congestion = 0.0;

  bool feasible() const { return demand.has_value(); }
};

// Pure: reads `state` but never modifies it.
CandidateEvaluation EvaluateCandidate(
    const CandidatePath& path, const ServiceRequest& request,
    const NetworkState& state, const DemandModel& model,
    unsigned scores = kScoreAll,
    CongestionMetric congestion = CongestionMetric::kMaxOccupiedFraction);

}  // namespace eonsim

#endif  // EONSIM_SERVICE_H_
