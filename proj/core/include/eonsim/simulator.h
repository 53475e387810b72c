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

// Discrete-event loss-network simulation.
//
// Requests are processed in arrival order. Before each arrival every
// lightpath whose departure time is strictly earlier than the arrival is
// released; the heuristic then either places the request or blocks it.
// Blocked requests are dropped, never retried. Blocking is only counted
// after the warm-up requests, but network state carries over the boundary.

#ifndef EONSIM_SIMULATOR_H_
#define EONSIM_SIMULATOR_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eonsim/heuristics.h"
#include "eonsim/service.h"
#include "eonsim/spectrum.h"
#include "eonsim/topology.h"
#include "eonsim/traffic.h"

namespace eonsim {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SimConfig {
  std::shared_ptr<const Topology> topology;
  HeuristicKind heuristic = HeuristicKind::kKspFf;
  int k = 5;
  PathOrdering ordering = PathOrdering::kHopsThenKm;
  TrafficConfig traffic;
  DemandModel demand;
  HeuristicOptions heuristic_options;
  long long warmup_requests = 3000;
  long long measured_requests = 10000;
  int trials = 10;
  uint64_t base_seed = 0;

  // Throws ConfigError.
  void Validate() const;
};

// Shared, immutable candidate table for (topology, k, ordering); computed
// on first use and reused afterwards. Thread-safe.
std::shared_ptr<const PathTable> CachedPathTable(
    const std::shared_ptr<const Topology>& topology, int k,
    PathOrdering ordering);

struct Lightpath {
  ServiceRequest request;
  const CandidatePath* path = nullptr;
  SlotBlock block;
};

// Network spectrum plus the set of established lightpaths, ordered by
// departure time.
class ActiveNetwork {
 public:
  explicit ActiveNetwork(const Topology& topology);

  const NetworkState& state() const { return state_; }
  int active_count() const { return active_count_; }

  // Releases lightpaths with departure_time < now.
  void ReleaseExpired(double now);
  void Establish(const ServiceRequest& request, const CandidatePath& path,
                 SlotBlock block);

  template <typename Fn>
  void ForEachActive(Fn&& fn) const {
    for (size_t i = 0; i < slots_.size(); ++i) {
      if (alive_[i]) fn(slots_[i]);
    }
  }

  // Replaces the spectrum state and the route/block of every active
  // lightpath at once. `placements` is indexed like ForEachActive order.
  void Reassign(NetworkState state,
                const std::vector<std::pair<const CandidatePath*, SlotBlock>>&
                    placements);

 private:
  using Departure = std::pair<double, int>;
  NetworkState state_;
  std::vector<Lightpath> slots_;
  std::vector<char> alive_;
  std::vector<int> free_list_;
  std::priority_queue<Departure, std::vector<Departure>, std::greater<>>
      departures_;
  int active_count_ = 0;
};

enum class RequestOutcome { kDirect, kDefrag, kBlocked };
std::string_view ToString(RequestOutcome outcome);

struct TrialResult {
  uint64_t seed = 0;
  long long blocked = 0;
  long long total = 0;  // measured requests
  double sbp = 0.0;
  int peak_active = 0;
  // Means over lightpaths established in the measured window.
  double mean_hops = 0.0;
  double mean_km = 0.0;
  // Measured requests admitted only after a defragmentation rebuild.
  long long defragmented = 0;
  // Per measured request; filled when TrialOptions::record_outcomes.
  std::vector<RequestOutcome> outcomes;

  bool operator==(const TrialResult&) const = default;
};

struct TrialOptions {
  bool record_outcomes = false;
  // Called after every processed request.
  std::function<void(const ActiveNetwork&)> observer;
};

TrialResult RunTrial(const SimConfig& config, uint64_t seed,
                     const TrialOptions& options = {});

struct LoadPoint {
  double load_erlangs = 0.0;
  double mean_sbp = 0.0;
  double std_sbp = 0.0;  // sample standard deviation; 0 for one trial
  int trials = 0;
  long long blocked_total = 0;
  std::vector<TrialResult> results;
};

struct LoadSweepResult {
  std::vector<LoadPoint> points;
  std::vector<std::string> warnings;
};

struct SweepOptions {
  int jobs = 0;  // 0 = hardware concurrency
  TrialOptions trial;
};

using TrialRunner = std::function<TrialResult(
    const SimConfig&, uint64_t seed, const TrialOptions&)>;

// Runs config.trials trials (seeds base_seed + i) at each load. Loads must
// be positive and strictly increasing. Warns when a load sees fewer than
// 100 blocking events in total.
LoadSweepResult Sweep(const SimConfig& config, std::span<const double> loads,
                      const SweepOptions& options = {},
                      const TrialRunner& runner = RunTrial);

// Mean and sample standard deviation of per-trial SBP.
LoadPoint Summarize(double load, std::vector<TrialResult> results);

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void ParallelFor(int count, int jobs, const std::function<void(int)>& fn);

// MSER truncation point of `series`, in observations: batch means of
// `batch_size`, then the d <= m/2 minimizing the marginal standard error of
// the remaining batches. Returns d * batch_size.
long long MserTruncation(std::span<const double> series, int batch_size = 5);

struct WarmupOptions {
  double mean_holding_time = 10.0;
  // Series length = max(min_requests, length_factor * load).
  double length_factor = 40.0;
  long long min_requests = 1000;
  int batch_size = 5;
  uint64_t base_seed = 0;
  int jobs = 0;
};

struct WarmupSummary {
  double load_erlangs = 0.0;
  std::vector<long long> truncation_points;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_low = 0.0;   // min point >= q1 - 1.5 IQR
  double whisker_high = 0.0;  // max point <= q3 + 1.5 IQR
};

// Active-connection count observed after each admission in a network that
// never blocks.
std::vector<double> NonBlockingOccupancy(double load, long long requests,
                                         double mean_holding_time,
                                         uint64_t seed);

WarmupSummary EstimateWarmup(double load_erlangs, int trials,
                             const WarmupOptions& options = {});

// Linear-interpolated quantile (same rule as numpy's default).
double Quantile(std::vector<double> values, double q);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

struct WarmupStudyResult {
  std::vector<WarmupSummary> summaries;  // one per load
  LinearFit whisker_high_fit;            // zero unless two or more loads
};

// EstimateWarmup at every load with disjoint seed blocks, so no seed is
// reused across the study: load i uses seeds base_seed + i * trials + t.
WarmupStudyResult WarmupStudy(std::span<const double> loads, int trials,
                              const WarmupOptions& options = {});

}  // namespace eonsim

#endif  // EONSIM_SIMULATOR_H_
