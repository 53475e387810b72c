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

// Lower-bound blocking estimation by resource-prioritized defragmentation.
//
// The simulation runs like an ordinary trial until a request blocks. The
// network is then rebuilt from empty: every active request, plus the new
// one, is re-placed with the same inner heuristic in descending order of
// slots x shortest-path hops. If everything fits the rebuilt network is
// adopted, otherwise the request counts as blocked and the original state
// is kept. Relaxing the no-reconfiguration constraint this way always
// yields a physically valid allocation.

#ifndef EONSIM_BOUNDS_H_
#define EONSIM_BOUNDS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eonsim/simulator.h"

namespace eonsim {

struct ResourceDemand {
  long long request_id = 0;
  double arrival_time = 0.0;
  int slots = 0;          // on the rank-0 candidate
  int shortest_hops = 0;  // hop count of the rank-0 candidate
  long long resource() const {
    return static_cast<long long>(slots) * shortest_hops;
  }
};

// Descending by slots x hops; ties go to the earlier arrival.
std::vector<ResourceDemand> SortByResource(std::vector<ResourceDemand> active);

// Resource key of `request`: demand and hop count of the first candidate
// that has a modulation format (the rank-0 path in practice).
ResourceDemand ResourceOf(const ServiceRequest& request,
                          std::span<const CandidatePath> candidates,
                          const DemandModel& model);

struct DefragOutcome {
  TrialResult result;  // blocked / total / sbp over the measured window
  long long allocated_directly = 0;
  long long allocated_after_defrag = 0;
  long long defrag_attempts = 0;  // all requests, warm-up included
};

// Inner heuristic is config.heuristic and must be ksp-ff or ff-ksp.
DefragOutcome DefragBoundTrial(const SimConfig& config, uint64_t seed,
                               const TrialOptions& options = {});

LoadSweepResult BoundSweep(const SimConfig& config,
                           std::span<const double> loads,
                           const SweepOptions& options = {});

struct CapacityGain {
  double target_sbp = 1e-3;
  std::optional<double> heuristic_load;
  std::optional<double> bound_load;
  std::optional<double> relative_gain;  // (bound - heuristic) / heuristic
  std::string diagnostic;               // set when a crossing is missing
};

// Load where mean SBP first crosses `target` going up the sweep, by
// piecewise-linear interpolation of log10(SBP) against load. When the lower
// bracketing point has zero SBP, SBP itself is interpolated linearly.
// Empty when the crossing is not bracketed.
std::optional<double> LoadAtSbp(const LoadSweepResult& sweep, double target);

struct BoundSweepResult {
  HeuristicKind heuristic = HeuristicKind::kKspFf;  // the one selected
  LoadSweepResult heuristic_sweep;
  LoadSweepResult bound_sweep;
  CapacityGain gain;
};

// Sweeps every heuristic in `inner` (paired seeds), keeps the one with the
// lowest total mean SBP, then sweeps the bound with it and reports the
// capacity gain at `target_sbp`.
BoundSweepResult RunBoundStudy(const SimConfig& config,
                               std::span<const double> loads,
                               std::span<const HeuristicKind> inner,
                               double target_sbp = 1e-3,
                               const SweepOptions& options = {});

}  // namespace eonsim

#endif  // EONSIM_BOUNDS_H_
