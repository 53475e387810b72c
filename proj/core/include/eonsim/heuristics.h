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

// Routing and spectrum allocation heuristics over a pre-computed candidate
// path list.
//
//   ksp-ff  first candidate (in list order) with a first-fit block.
//   ff-ksp  candidate whose first-fit block starts lowest; ties to rank.
//   ksp-bf  first candidate with a best-fit block.
//   bf-ksp  candidate whose best-fit block sits in the smallest free run;
//           ties to lower start, then rank.
//   kme-ff  candidate minimizing summed per-fiber fragmentation entropy
//           after first-fit placement; ties to rank.
//   kca-ff  candidate minimizing path congestion; ties to rank; first fit.

#ifndef EONSIM_HEURISTICS_H_
#define EONSIM_HEURISTICS_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eonsim/service.h"
#include "eonsim/spectrum.h"
#include "eonsim/topology.h"
#include "eonsim/traffic.h"

namespace eonsim {

enum class HeuristicKind { kKspFf, kFfKsp, kKspBf, kBfKsp, kKmeFf, kKcaFf };

inline constexpr HeuristicKind kAllHeuristics[] = {
    HeuristicKind::kKspFf, HeuristicKind::kFfKsp, HeuristicKind::kKspBf,
    HeuristicKind::kBfKsp, HeuristicKind::kKmeFf, HeuristicKind::kKcaFf};

std::string_view ToString(HeuristicKind kind);
std::optional<HeuristicKind> ParseHeuristic(std::string_view name);

struct Allocation {
  int rank = 0;  // index into the candidate list
  SlotBlock block;
  bool operator==(const Allocation&) const = default;
};

struct HeuristicOptions {
  CongestionMetric congestion = CongestionMetric::kMaxOccupiedFraction;
};

// Empty result means the request is blocked.
std::optional<Allocation> Decide(HeuristicKind kind,
                                 const ServiceRequest& request,
                                 std::span<const CandidatePath> candidates,
                                 const NetworkState& state,
                                 const DemandModel& model,
                                 const HeuristicOptions& options = {});

}  // namespace eonsim

#endif  // EONSIM_HEURISTICS_H_
