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

#include "eonsim/traffic.h"

#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace eonsim {

void TrafficConfig::Validate() const {
  if (!(arrival_rate > 0.0) || !std::isfinite(arrival_rate)) {
    throw std::invalid_argument("arrival rate must be positive");
  }
  if (!(mean_holding_time > 0.0) || !std::isfinite(mean_holding_time)) {
    throw std::invalid_argument("mean holding time must be positive");
  }
  if (const auto* rate = std::get_if<UniformRate>(&demand)) {
    if (rate->min_gbps <= 0 || rate->max_gbps < rate->min_gbps ||
        rate->step_gbps <= 0) {
      throw std::invalid_argument("invalid data-rate range");
    }
  } else {
    const auto& slots = std::get<UniformSlots>(demand);
    if (slots.choices.empty()) {
      throw std::invalid_argument("slot demand set is empty");
    }
    for (int s : slots.choices) {
      if (s < 1) throw std::invalid_argument("slot demands must be >= 1");
    }
  }
}

double TruncatedHoldingMean(double mean_holding_time) {
  const double e2 = std::exp(-2.0);
  return mean_holding_time * (1.0 - 3.0 * e2) / (1.0 - e2);
}

std::mt19937_64 MakeSubStream(uint64_t seed, SubStream stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed & 0xffffffffu),
                    static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream)};
  return std::mt19937_64(seq);
}

TrafficGenerator::TrafficGenerator(const TrafficConfig& config, int num_nodes)
    : config_(config),
      num_nodes_(num_nodes),
      arrivals_(MakeSubStream(config.seed, SubStream::kArrivals)),
      holding_(MakeSubStream(config.seed, SubStream::kHolding)),
      demand_(MakeSubStream(config.seed, SubStream::kDemand)),
      endpoints_(MakeSubStream(config.seed, SubStream::kEndpoints)) {
  config_.Validate();
  if (num_nodes < 2) {
    throw std::invalid_argument("traffic needs at least two nodes");
  }
}

ServiceRequest TrafficGenerator::Next() {
  ServiceRequest request;
  request.id = next_id_++;

  clock_ += SampleExponential(1.0 / config_.arrival_rate, arrivals_);
  request.arrival_time = clock_;

  request.holding_time =
      config_.holding == HoldingModel::kInfinite
          ? std::numeric_limits<double>::infinity()
          : SampleHoldingTime(config_.mean_holding_time,
                              config_.truncate_holding, holding_);

  if (const auto* rate = std::get_if<UniformRate>(&config_.demand)) {
    uint64_t steps = (rate->max_gbps - rate->min_gbps) / rate->step_gbps + 1;
    request.demand = DataRate{static_cast<double>(
        rate->min_gbps + rate->step_gbps * UniformIndex(steps, demand_))};
  } else {
    const auto& choices = std::get<UniformSlots>(config_.demand).choices;
    request.demand = FixedSlots{choices[UniformIndex(choices.size(), demand_)]};
  }

  const uint64_t n = num_nodes_;
  NodeId src = static_cast<NodeId>(UniformIndex(n, endpoints_));
  NodeId dst = static_cast<NodeId>(UniformIndex(n - 1, endpoints_));
  if (dst >= src) ++dst;
  if (config_.pairs == PairModel::kUnordered && src > dst) std::swap(src, dst);
  request.source = src;
  request.destination = dst;
  return request;
}

std::vector<ServiceRequest> GenerateStream(const TrafficConfig& config,
                                           int num_nodes, long long count) {
  if (count < 1) throw std::invalid_argument("request count must be >= 1");
  TrafficGenerator generator(config, num_nodes);
  std::vector<ServiceRequest> stream;
  stream.reserve(count);
  for (long long i = 0; i < count; ++i) stream.push_back(generator.Next());
  return stream;
}

void WriteStreamCsv(std::ostream& out, const std::vector<ServiceRequest>& stream,
                    const Topology* topology) {
  auto name = [&](NodeId id) {
    return topology ? topology->node_name(id) : std::to_string(id);
  };
  out << "id,source,destination,demand_kind,demand,arrival_time,holding_time\n";
  out << std::setprecision(17);
  for (const ServiceRequest& r : stream) {
    out << r.id << ',' << name(r.source) << ',' << name(r.destination) << ',';
    if (const auto* rate = std::get_if<DataRate>(&r.demand)) {
      out << "gbps," << rate->gbps;
    } else {
      out << "slots," << std::get<FixedSlots>(r.demand).slots;
    }
    out << ',' << r.arrival_time << ',' << r.holding_time << '\n';
  }
}

}  // namespace eonsim
