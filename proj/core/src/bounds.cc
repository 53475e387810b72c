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

#include "eonsim/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace eonsim {

namespace {

bool ResourceBefore(const ResourceDemand& a, const ResourceDemand& b) {
  if (a.resource() != b.resource()) return a.resource() > b.resource();
  if (a.arrival_time != b.arrival_time) return a.arrival_time < b.arrival_time;
  return a.request_id < b.request_id;
}

struct Rebuild {
  NetworkState state;
  // Placement per request, in the order the requests were passed in.
  std::vector<std::pair<const CandidatePath*, SlotBlock>> placements;
};

// Re-places `requests` into an empty network in resource order. Empty when
// any request cannot be placed.
std::optional<Rebuild> TryRebuild(
    const SimConfig& config, const PathTable& table,
    const std::vector<const ServiceRequest*>& requests) {
  std::vector<ResourceDemand> keys;
  keys.reserve(requests.size());
  for (const ServiceRequest* r : requests) {
    keys.push_back(
        ResourceOf(*r, table.Paths(r->source, r->destination), config.demand));
  }
  std::vector<size_t> order(requests.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return ResourceBefore(keys[a], keys[b]);
  });

  Rebuild rebuild{NetworkState(*config.topology), {}};
  rebuild.placements.resize(requests.size());
  for (size_t index : order) {
    const ServiceRequest& r = *requests[index];
    auto candidates = table.Paths(r.source, r.destination);
    auto allocation = Decide(config.heuristic, r, candidates, rebuild.state,
                             config.demand, config.heuristic_options);
    if (!allocation) return std::nullopt;
    const CandidatePath& path = candidates[allocation->rank];
    rebuild.state.Allocate(path.fibers, allocation->block);
    rebuild.placements[index] = {&path, allocation->block};
  }
  return rebuild;
}

}  // namespace

std::vector<ResourceDemand> SortByResource(std::vector<ResourceDemand> active) {
  std::sort(active.begin(), active.end(), ResourceBefore);
  return active;
}

ResourceDemand ResourceOf(const ServiceRequest& request,
                          std::span<const CandidatePath> candidates,
                          const DemandModel& model) {
  ResourceDemand key;
  key.request_id = request.id;
  key.arrival_time = request.arrival_time;
  for (const CandidatePath& path : candidates) {
    if (auto demand = ComputeDemand(model, request.demand, path.length_km)) {
      key.slots = demand->slots;
      key.shortest_hops = path.hop_count();
      return key;
    }
  }
  if (!candidates.empty()) key.shortest_hops = candidates.front().hop_count();
  return key;
}

DefragOutcome DefragBoundTrial(const SimConfig& config, uint64_t seed,
                               const TrialOptions& options) {
  config.Validate();
  if (config.heuristic != HeuristicKind::kKspFf &&
      config.heuristic != HeuristicKind::kFfKsp) {
    throw ConfigError("defragmentation bound needs ksp-ff or ff-ksp");
  }
  auto table = CachedPathTable(config.topology, config.k, config.ordering);
  TrafficConfig traffic = config.traffic;
  traffic.seed = seed;
  TrafficGenerator generator(traffic, config.topology->num_nodes());
  ActiveNetwork network(*config.topology);

  DefragOutcome outcome;
  TrialResult& result = outcome.result;
  result.seed = seed;
  result.total = config.measured_requests;
  long long established = 0;
  double hops_sum = 0.0;
  double km_sum = 0.0;
  const long long total = config.warmup_requests + config.measured_requests;
  if (options.record_outcomes) result.outcomes.reserve(config.measured_requests);

  std::vector<const ServiceRequest*> replay;
  for (long long i = 0; i < total; ++i) {
    ServiceRequest request = generator.Next();
    network.ReleaseExpired(request.arrival_time);
    auto candidates = table->Paths(request.source, request.destination);
    const bool measured = i >= config.warmup_requests;

    RequestOutcome status = RequestOutcome::kBlocked;
    const CandidatePath* path = nullptr;
    if (auto allocation = Decide(config.heuristic, request, candidates,
                                 network.state(), config.demand,
                                 config.heuristic_options)) {
      path = &candidates[allocation->rank];
      network.Establish(request, *path, allocation->block);
      status = RequestOutcome::kDirect;
    } else if (!candidates.empty()) {
      ++outcome.defrag_attempts;
      replay.clear();
      network.ForEachActive(
          [&](const Lightpath& lp) { replay.push_back(&lp.request); });
      replay.push_back(&request);
      if (auto rebuilt = TryRebuild(config, *table, replay)) {
        auto [new_path, new_block] = rebuilt->placements.back();
        rebuilt->placements.pop_back();
        rebuilt->state.Release(new_path->fibers, new_block);
        network.Reassign(std::move(rebuilt->state), rebuilt->placements);
        network.Establish(request, *new_path, new_block);
        path = new_path;
        status = RequestOutcome::kDefrag;
      }
    }

    if (measured) {
      switch (status) {
        case RequestOutcome::kDirect: ++outcome.allocated_directly; break;
        case RequestOutcome::kDefrag: ++outcome.allocated_after_defrag; break;
        case RequestOutcome::kBlocked: ++result.blocked; break;
      }
      if (path) {
        ++established;
        hops_sum += path->hop_count();
        km_sum += path->length_km;
      }
      if (options.record_outcomes) result.outcomes.push_back(status);
    }
    result.peak_active = std::max(result.peak_active, network.active_count());
    if (options.observer) options.observer(network);
  }
  result.sbp = static_cast<double>(result.blocked) / result.total;
  result.defragmented = outcome.allocated_after_defrag;
  if (established > 0) {
    result.mean_hops = hops_sum / established;
    result.mean_km = km_sum / established;
  }
  return outcome;
}

LoadSweepResult BoundSweep(const SimConfig& config,
                           std::span<const double> loads,
                           const SweepOptions& options) {
  return Sweep(config, loads, options,
               [](const SimConfig& c, uint64_t seed, const TrialOptions& o) {
                 return DefragBoundTrial(c, seed, o).result;
               });
}

std::optional<double> LoadAtSbp(const LoadSweepResult& sweep, double target) {
  const auto& pts = sweep.points;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double lo = pts[i].mean_sbp;
    const double hi = pts[i + 1].mean_sbp;
    if (!(lo <= target && hi > target)) continue;
    const double x0 = pts[i].load_erlangs;
    const double x1 = pts[i + 1].load_erlangs;
    if (lo == target) return x0;
    double fraction;
    if (lo > 0.0) {
      fraction = (std::log10(target) - std::log10(lo)) /
                 (std::log10(hi) - std::log10(lo));
    } else {
      fraction = target / hi;
    }
    return x0 + fraction * (x1 - x0);
  }
  return std::nullopt;
}

BoundSweepResult RunBoundStudy(const SimConfig& config,
                               std::span<const double> loads,
                               std::span<const HeuristicKind> inner,
                               double target_sbp, const SweepOptions& options) {
  if (inner.empty()) throw ConfigError("no inner heuristic given");
  BoundSweepResult study;
  double best_total = std::numeric_limits<double>::infinity();
  for (HeuristicKind kind : inner) {
    SimConfig local = config;
    local.heuristic = kind;
    LoadSweepResult sweep = Sweep(local, loads, options);
    double total = 0.0;
    for (const LoadPoint& p : sweep.points) total += p.mean_sbp;
    if (total < best_total) {
      best_total = total;
      study.heuristic = kind;
      study.heuristic_sweep = std::move(sweep);
    }
  }
  SimConfig bound = config;
  bound.heuristic = study.heuristic;
  study.bound_sweep = BoundSweep(bound, loads, options);

  CapacityGain& gain = study.gain;
  gain.target_sbp = target_sbp;
  gain.heuristic_load = LoadAtSbp(study.heuristic_sweep, target_sbp);
  gain.bound_load = LoadAtSbp(study.bound_sweep, target_sbp);
  if (!gain.heuristic_load) {
    gain.diagnostic += "heuristic SBP does not cross the target within the "
                       "load range; ";
  }
  if (!gain.bound_load) {
    gain.diagnostic += "bound SBP does not cross the target within the load "
                       "range; ";
  }
  if (gain.heuristic_load && gain.bound_load) {
    gain.relative_gain =
        (*gain.bound_load - *gain.heuristic_load) / *gain.heuristic_load;
  } else {
    std::ostringstream msg;
    msg << "widen the load range to bracket SBP " << target_sbp;
    gain.diagnostic += msg.str();
  }
  return study;
}

}  // namespace eonsim
