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

#include "eonsim/simulator.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

namespace eonsim {

void SimConfig::Validate() const {
  if (!topology) throw ConfigError("no topology");
  if (k < 1) throw ConfigError("k must be >= 1");
  if (warmup_requests < 0) throw ConfigError("warm-up must be >= 0");
  if (measured_requests < 1) throw ConfigError("measured requests must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (demand.guard_slots < 0) throw ConfigError("guard slots must be >= 0");
  try {
    traffic.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  bool fixed_demand = std::holds_alternative<UniformSlots>(traffic.demand);
  if (fixed_demand != demand.fixed_width) {
    throw ConfigError(fixed_demand
                          ? "slot demands require the fixed-width model"
                          : "rate demands require the modulated model");
  }
  if (topology->num_nodes() < 2) throw ConfigError("topology needs 2 nodes");
}

std::shared_ptr<const PathTable> CachedPathTable(
    const std::shared_ptr<const Topology>& topology, int k,
    PathOrdering ordering) {
  using Key = std::tuple<const Topology*, int, PathOrdering>;
  struct Entry {
    std::weak_ptr<const Topology> owner;
    std::shared_ptr<const PathTable> table;
  };
  static std::mutex mutex;
  static std::map<Key, Entry> cache;

  Key key{topology.get(), k, ordering};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end() && !it->second.owner.expired()) {
      return it->second.table;
    }
  }
  auto table = std::make_shared<const PathTable>(*topology, k, ordering);
  std::lock_guard lock(mutex);
  // Drop entries whose topology died so a reused address cannot alias.
  std::erase_if(cache, [](const auto& kv) { return kv.second.owner.expired(); });
  auto [it, inserted] = cache.try_emplace(key, Entry{topology, table});
  return it->second.table;
}

ActiveNetwork::ActiveNetwork(const Topology& topology) : state_(topology) {}

void ActiveNetwork::ReleaseExpired(double now) {
  while (!departures_.empty() && departures_.top().first < now) {
    int slot = departures_.top().second;
    departures_.pop();
    Lightpath& lp = slots_[slot];
    state_.Release(lp.path->fibers, lp.block);
    alive_[slot] = 0;
    free_list_.push_back(slot);
    --active_count_;
  }
}

void ActiveNetwork::Establish(const ServiceRequest& request,
                              const CandidatePath& path, SlotBlock block) {
  state_.Allocate(path.fibers, block);
  int slot;
  if (!free_list_.empty()) {
    slot = free_list_.back();
    free_list_.pop_back();
    slots_[slot] = Lightpath{request, &path, block};
    alive_[slot] = 1;
  } else {
    slot = static_cast<int>(slots_.size());
    slots_.push_back(Lightpath{request, &path, block});
    alive_.push_back(1);
  }
  ++active_count_;
  if (std::isfinite(request.departure_time())) {
    departures_.emplace(request.departure_time(), slot);
  }
}

void ActiveNetwork::Reassign(
    NetworkState state,
    const std::vector<std::pair<const CandidatePath*, SlotBlock>>& placements) {
  if (static_cast<int>(placements.size()) != active_count_) {
    throw std::logic_error("placement count does not match active lightpaths");
  }
  size_t next = 0;
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (!alive_[i]) continue;
    slots_[i].path = placements[next].first;
    slots_[i].block = placements[next].second;
    ++next;
  }
  state_ = std::move(state);
}

std::string_view ToString(RequestOutcome outcome) {
  switch (outcome) {
    case RequestOutcome::kDirect: return "direct";
    case RequestOutcome::kDefrag: return "defrag";
    case RequestOutcome::kBlocked: return "blocked";
  }
  return "unknown";
}

TrialResult RunTrial(const SimConfig& config, uint64_t seed,
                     const TrialOptions& options) {
  config.Validate();
  auto table = CachedPathTable(config.topology, config.k, config.ordering);
  TrafficConfig traffic = config.traffic;
  traffic.seed = seed;
  TrafficGenerator generator(traffic, config.topology->num_nodes());
  ActiveNetwork network(*config.topology);

  TrialResult result;
  result.seed = seed;
  result.total = config.measured_requests;
  long long established = 0;
  double hops_sum = 0.0;
  double km_sum = 0.0;
  const long long total = config.warmup_requests + config.measured_requests;
  if (options.record_outcomes) result.outcomes.reserve(config.measured_requests);

  for (long long i = 0; i < total; ++i) {
    ServiceRequest request = generator.Next();
    network.ReleaseExpired(request.arrival_time);
    auto candidates = table->Paths(request.source, request.destination);
    auto allocation = Decide(config.heuristic, request, candidates,
                             network.state(), config.demand,
                             config.heuristic_options);
    const bool measured = i >= config.warmup_requests;
    if (allocation) {
      const CandidatePath& path = candidates[allocation->rank];
      network.Establish(request, path, allocation->block);
      if (measured) {
        ++established;
        hops_sum += path.hop_count();
        km_sum += path.length_km;
      }
    } else if (measured) {
      ++result.blocked;
    }
    if (measured && options.record_outcomes) {
      result.outcomes.push_back(allocation ? RequestOutcome::kDirect
                                           : RequestOutcome::kBlocked);
    }
    result.peak_active = std::max(result.peak_active, network.active_count());
    if (options.observer) options.observer(network);
  }
  result.sbp = static_cast<double>(result.blocked) / result.total;
  if (established > 0) {
    result.mean_hops = hops_sum / established;
    result.mean_km = km_sum / established;
  }
  return result;
}

void ParallelFor(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, std::max(1, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

LoadPoint Summarize(double load, std::vector<TrialResult> results) {
  LoadPoint point;
  point.load_erlangs = load;
  point.trials = static_cast<int>(results.size());
  double sum = 0.0;
  for (const auto& r : results) {
    sum += r.sbp;
    point.blocked_total += r.blocked;
  }
  if (!results.empty()) point.mean_sbp = sum / results.size();
  if (results.size() >= 2) {
    double ss = 0.0;
    for (const auto& r : results) ss += (r.sbp - point.mean_sbp) * (r.sbp - point.mean_sbp);
    point.std_sbp = std::sqrt(ss / (results.size() - 1));
  }
  point.results = std::move(results);
  return point;
}

LoadSweepResult Sweep(const SimConfig& config, std::span<const double> loads,
                      const SweepOptions& options, const TrialRunner& runner) {
  if (loads.empty()) throw ConfigError("no loads given");
  for (size_t i = 0; i < loads.size(); ++i) {
    if (!(loads[i] > 0.0)) throw ConfigError("loads must be positive");
    if (i > 0 && !(loads[i] > loads[i - 1])) {
      throw ConfigError("loads must be strictly increasing");
    }
  }
  config.Validate();
  CachedPathTable(config.topology, config.k, config.ordering);

  const int trials = config.trials;
  const int count = static_cast<int>(loads.size()) * trials;
  std::vector<TrialResult> flat(count);
  ParallelFor(count, options.jobs, [&](int index) {
    SimConfig local = config;
    local.traffic.SetLoad(loads[index / trials]);
    flat[index] = runner(local, config.base_seed + index % trials,
                         options.trial);
  });

  LoadSweepResult sweep;
  for (size_t l = 0; l < loads.size(); ++l) {
    std::vector<TrialResult> results(flat.begin() + l * trials,
                                     flat.begin() + (l + 1) * trials);
    sweep.points.push_back(Summarize(loads[l], std::move(results)));
    if (sweep.points.back().blocked_total < 100) {
      std::ostringstream msg;
      msg << "load " << loads[l] << ": only "
          << sweep.points.back().blocked_total
          << " blocking events; fewer than 100, SBP estimate is unreliable";
      sweep.warnings.push_back(msg.str());
    }
  }
  return sweep;
}

long long MserTruncation(std::span<const double> series, int batch_size) {
  if (batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  const size_t m = series.size() / batch_size;
  if (m < 2) return 0;
  std::vector<double> batches(m);
  for (size_t j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < batch_size; ++i) s += series[j * batch_size + i];
    batches[j] = s / batch_size;
  }
  // Suffix sums of batch means and their squares.
  std::vector<double> sum(m + 1, 0.0), sum_sq(m + 1, 0.0);
  for (size_t j = m; j-- > 0;) {
    sum[j] = sum[j + 1] + batches[j];
    sum_sq[j] = sum_sq[j + 1] + batches[j] * batches[j];
  }
  size_t best_d = 0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t d = 0; d <= m / 2; ++d) {
    const double n = static_cast<double>(m - d);
    const double mean = sum[d] / n;
    const double ss = std::max(0.0, sum_sq[d] - n * mean * mean);
    const double stat = ss / (n * n);
    if (stat < best) {
      best = stat;
      best_d = d;
    }
  }
  return static_cast<long long>(best_d) * batch_size;
}

std::vector<double> NonBlockingOccupancy(double load, long long requests,
                                         double mean_holding_time,
                                         uint64_t seed) {
  TrafficConfig traffic;
  traffic.mean_holding_time = mean_holding_time;
  traffic.SetLoad(load);
  traffic.demand = UniformSlots{{1}};
  traffic.seed = seed;
  TrafficGenerator generator(traffic, 2);

  std::priority_queue<double, std::vector<double>, std::greater<>> departures;
  std::vector<double> series;
  series.reserve(requests);
  for (long long i = 0; i < requests; ++i) {
    ServiceRequest r = generator.Next();
    while (!departures.empty() && departures.top() < r.arrival_time) {
      departures.pop();
    }
    departures.push(r.departure_time());
    series.push_back(static_cast<double>(departures.size()));
  }
  return series;
}

double Quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty set");
  std::sort(values.begin(), values.end());
  double pos = q * (values.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(pos));
  size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - lo) * (values[hi] - values[lo]);
}

WarmupSummary EstimateWarmup(double load_erlangs, int trials,
                             const WarmupOptions& options) {
  if (!(load_erlangs > 0.0)) throw ConfigError("load must be positive");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  const long long length = std::max<long long>(
      options.min_requests,
      static_cast<long long>(std::llround(options.length_factor * load_erlangs)));

  WarmupSummary summary;
  summary.load_erlangs = load_erlangs;
  summary.truncation_points.resize(trials);
  ParallelFor(trials, options.jobs, [&](int t) {
    auto series = NonBlockingOccupancy(load_erlangs, length,
                                       options.mean_holding_time,
                                       options.base_seed + t);
    summary.truncation_points[t] = MserTruncation(series, options.batch_size);
  });

  std::vector<double> points(summary.truncation_points.begin(),
                             summary.truncation_points.end());
  summary.q1 = Quantile(points, 0.25);
  summary.median = Quantile(points, 0.5);
  summary.q3 = Quantile(points, 0.75);
  const double iqr = summary.q3 - summary.q1;
  summary.whisker_low = summary.q1;
  summary.whisker_high = summary.q3;
  for (double p : points) {
    if (p >= summary.q1 - 1.5 * iqr) summary.whisker_low = std::min(summary.whisker_low, p);
    if (p <= summary.q3 + 1.5 * iqr) summary.whisker_high = std::max(summary.whisker_high, p);
  }
  return summary;
}

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("line fit needs >= 2 paired points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("line fit needs distinct x");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

WarmupStudyResult WarmupStudy(std::span<const double> loads, int trials,
                              const WarmupOptions& options) {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  WarmupStudyResult study;
  std::vector<double> x, high;
  for (size_t i = 0; i < loads.size(); ++i) {
    WarmupOptions local = options;
    local.base_seed = options.base_seed + i * static_cast<uint64_t>(trials);
    study.summaries.push_back(EstimateWarmup(loads[i], trials, local));
    x.push_back(loads[i]);
    high.push_back(study.summaries.back().whisker_high);
  }
  if (loads.size() >= 2) study.whisker_high_fit = FitLine(x, high);
  return study;
}

}  // namespace eonsim
