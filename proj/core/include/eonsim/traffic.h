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

// Seeded Poisson request streams with exponential holding times.
//
// Every generator owns four independent random sub-streams (arrivals,
// holding times, demands, endpoints) derived from one 64-bit seed, so
// changing one distribution never shifts the draws of the others. Two
// simulations fed from the same seed therefore see the same requests
// regardless of the allocation policy, which is what paired-seed
// comparisons rely on.

#ifndef EONSIM_TRAFFIC_H_
#define EONSIM_TRAFFIC_H_

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <variant>
#include <vector>

#include "eonsim/topology.h"

namespace eonsim {

// Requested line rate, converted to slots by the modulation table.
struct DataRate {
  double gbps = 0.0;
  bool operator==(const DataRate&) const = default;
};
// Slot count requested directly (fixed-width requests, no modulation).
struct FixedSlots {
  int slots = 0;
  bool operator==(const FixedSlots&) const = default;
};
using Demand = std::variant<DataRate, FixedSlots>;

// Uniform integer rate in [min_gbps, max_gbps] on a `step_gbps` grid.
struct UniformRate {
  int min_gbps = 25;
  int max_gbps = 100;
  int step_gbps = 1;
};
// Uniform choice from an explicit list of slot counts.
struct UniformSlots {
  std::vector<int> choices = {1};
};
using DemandDistribution = std::variant<UniformRate, UniformSlots>;

enum class HoldingModel {
  kExponential,
  kInfinite,  // degenerate test mode: nothing ever departs
};

enum class PairModel {
  kOrdered,    // (src, dst) uniform over ordered pairs
  kUnordered,  // uniform over unordered pairs, emitted with src < dst
};

struct TrafficConfig {
  double arrival_rate = 10.0;       // lambda, requests per time unit
  double mean_holding_time = 10.0;  // tau, time units
  DemandDistribution demand = UniformRate{};
  PairModel pairs = PairModel::kOrdered;
  HoldingModel holding = HoldingModel::kExponential;
  bool truncate_holding = false;
  uint64_t seed = 0;

  double load_erlangs() const { return arrival_rate * mean_holding_time; }
  // Sets arrival_rate so that load_erlangs() == load for the current tau.
  void SetLoad(double load) { arrival_rate = load / mean_holding_time; }
  // Throws std::invalid_argument for non-positive rates or empty demands.
  void Validate() const;
};

struct ServiceRequest {
  long long id = 0;
  NodeId source = 0;
  NodeId destination = 0;
  Demand demand;
  double arrival_time = 0.0;
  double holding_time = 0.0;

  double departure_time() const { return arrival_time + holding_time; }
};

// Conditional mean of an exponential with mean tau restricted to (0, 2 tau]:
// tau * (1 - 3 e^-2) / (1 - e^-2).
double TruncatedHoldingMean(double mean_holding_time);

// Exponential variate with mean `mean`, always strictly positive.
template <typename Rng>
double SampleExponential(double mean, Rng& rng) {
  // Open interval (0, 1) from the top 53 bits.
  double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  return -mean * std::log(u);
}

// Exponential holding time; with `truncate`, redrawn until <= 2 * mean.
template <typename Rng>
double SampleHoldingTime(double mean, bool truncate, Rng& rng) {
  for (;;) {
    double value = SampleExponential(mean, rng);
    if (!truncate || value <= 2.0 * mean) return value;
  }
}

// Unbiased integer in [0, bound).
template <typename Rng>
uint64_t UniformIndex(uint64_t bound, Rng& rng) {
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
  for (;;) {
    uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

// Sub-stream seeds are std::seed_seq{lo32(seed), hi32(seed), stream}.
enum class SubStream : uint32_t {
  kArrivals = 1,
  kHolding = 2,
  kDemand = 3,
  kEndpoints = 4,
};
std::mt19937_64 MakeSubStream(uint64_t seed, SubStream stream);

class TrafficGenerator {
 public:
  // Throws std::invalid_argument for an invalid config or < 2 nodes.
  TrafficGenerator(const TrafficConfig& config, int num_nodes);

  ServiceRequest Next();
  const TrafficConfig& config() const { return config_; }

 private:
  TrafficConfig config_;
  int num_nodes_;
  long long next_id_ = 0;
  double clock_ = 0.0;
  std::mt19937_64 arrivals_;
  std::mt19937_64 holding_;
  std::mt19937_64 demand_;
  std::mt19937_64 endpoints_;
};

std::vector<ServiceRequest> GenerateStream(const TrafficConfig& config,
                                           int num_nodes, long long count);

// Row-per-request audit dump:
// id,source,destination,demand_kind,demand,arrival_time,holding_time
void WriteStreamCsv(std::ostream& out, const std::vector<ServiceRequest>& stream,
                    const Topology* topology = nullptr);

}  // namespace eonsim

#endif  // EONSIM_TRAFFIC_H_
