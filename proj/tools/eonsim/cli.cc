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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "eonsim/bounds.h"
#include "eonsim/presets.h"
#include "eonsim/report.h"
#include "eonsim/simulator.h"
#include "eonsim/topology.h"
#include "eonsim/traffic.h"
#include "json.hpp"

namespace eonsim::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulationFlags {
  std::string preset = "deeprmsa";
  std::string topology;
  std::string heuristic = "ksp-ff";
  int k = 5;
  std::string ordering = "hops";
  std::string loads;
  int trials = 0;  // 0: preset value
  uint64_t seed = 0;
  long long warmup_requests = -1;  // negative: preset value
  long long measured_requests = -1;
  bool record_outcomes = false;
  double target_sbp = 1e-3;
};

struct CommonFlags {
  std::string out;
  int jobs = 0;
};

void AddSimulationFlags(CLI::App* app, SimulationFlags& f, bool bound) {
  app->add_option("--preset", f.preset, "Problem setting")
      ->capture_default_str();
  app->add_option("--topology", f.topology,
                  "Preset topology label, bundled name or file path");
  app->add_option("--heuristic", f.heuristic,
                  bound ? "Inner heuristic: auto, ksp-ff or ff-ksp"
                        : "ksp-ff, ff-ksp, ksp-bf, bf-ksp, kme-ff, kca-ff")
      ->capture_default_str();
  app->add_option("--k", f.k, "Candidate paths per node pair")
      ->capture_default_str();
  app->add_option("--ordering", f.ordering, "Candidate order: km or hops")
      ->capture_default_str();
  app->add_option("--loads", f.loads,
                  "Loads in Erlang: start:stop:step or a,b,c")
      ->required();
  app->add_option("--trials", f.trials, "Trials per load (default: preset)");
  app->add_option("--seed", f.seed, "Base seed; trial i uses seed + i")
      ->capture_default_str();
  app->add_option("--warmup-requests", f.warmup_requests,
                  "Unmeasured requests per trial (default: preset)");
  app->add_option("--measured-requests", f.measured_requests,
                  "Measured requests per trial (default: preset)");
  app->add_flag("--record-outcomes", f.record_outcomes,
                "Write per-request outcomes.csv");
  if (bound) {
    app->add_option("--target", f.target_sbp, "SBP for the capacity gain")
        ->capture_default_str();
  }
}

void AddCommonFlags(CLI::App* app, CommonFlags& c) {
  app->add_option("--out", c.out, "Output directory for CSV and manifest");
  app->add_option("--jobs", c.jobs, "Worker threads (0: all cores)")
      ->capture_default_str();
}

const ExperimentPreset& RequirePreset(const std::string& name) {
  const ExperimentPreset* preset = FindPreset(name);
  if (!preset) throw ConfigError("unknown preset '" + name + "'");
  return *preset;
}

PathOrdering RequireOrdering(const std::string& text) {
  auto ordering = ParsePathOrdering(text);
  if (!ordering) throw ConfigError("unknown ordering '" + text + "'");
  return *ordering;
}

HeuristicKind RequireHeuristic(const std::string& text) {
  auto kind = ParseHeuristic(text);
  if (!kind) throw ConfigError("unknown heuristic '" + text + "'");
  return *kind;
}

SimConfig Resolve(const SimulationFlags& f) {
  const ExperimentPreset& preset = RequirePreset(f.preset);
  SimConfig config = MakeConfig(preset, LoadPresetTopology(preset, f.topology));
  config.k = f.k;
  config.ordering = RequireOrdering(f.ordering);
  if (f.trials != 0) config.trials = f.trials;
  config.base_seed = f.seed;
  if (f.warmup_requests >= 0) config.warmup_requests = f.warmup_requests;
  if (f.measured_requests >= 0) config.measured_requests = f.measured_requests;
  return config;
}

// Every flag spelled out, so a rerun does not depend on preset defaults.
std::vector<std::string> CanonicalArgs(const std::string& command,
                                       const SimulationFlags& f,
                                       const SimConfig& config) {
  std::vector<std::string> args = {
      command,
      "--preset", f.preset,
      "--topology", f.topology.empty() ? config.topology->name() : f.topology,
      "--heuristic", f.heuristic,
      "--k", std::to_string(config.k),
      "--ordering", std::string(ToString(config.ordering)),
      "--loads", f.loads,
      "--trials", std::to_string(config.trials),
      "--seed", std::to_string(config.base_seed),
      "--warmup-requests", std::to_string(config.warmup_requests),
      "--measured-requests", std::to_string(config.measured_requests),
  };
  if (command == "bound") {
    args.push_back("--target");
    args.push_back(FormatNumber(f.target_sbp));
  }
  if (f.record_outcomes) args.push_back("--record-outcomes");
  return args;
}

Json ConfigJson(const SimConfig& config, std::span<const double> loads) {
  const Topology& t = *config.topology;
  Json demand;
  if (const auto* rate = std::get_if<UniformRate>(&config.traffic.demand)) {
    demand = {{"kind", "rate_gbps"},
              {"min", rate->min_gbps},
              {"max", rate->max_gbps},
              {"step", rate->step_gbps}};
  } else {
    demand = {{"kind", "slots"},
              {"choices", std::get<UniformSlots>(config.traffic.demand).choices}};
  }
  return Json{
      {"topology",
       {{"name", t.name()},
        {"nodes", t.num_nodes()},
        {"links", t.num_links()},
        {"fiber_mode", ToString(t.fiber_mode())},
        {"slots_per_fiber", t.slots_per_fiber()}}},
      {"heuristic", ToString(config.heuristic)},
      {"k", config.k},
      {"ordering", ToString(config.ordering)},
      {"loads_erlangs", std::vector<double>(loads.begin(), loads.end())},
      {"trials", config.trials},
      {"base_seed", config.base_seed},
      {"warmup_requests", config.warmup_requests},
      {"measured_requests", config.measured_requests},
      {"mean_holding_time", config.traffic.mean_holding_time},
      {"truncate_holding", config.traffic.truncate_holding},
      {"demand", demand},
      {"modulation", !config.demand.fixed_width},
      {"slot_width_ghz", config.demand.slot_width_ghz},
  };
}

std::string UtcNow() {
  std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

// Output directory plus the run bookkeeping written next to the results.
class Artifacts {
 public:
  explicit Artifacts(std::string dir)
      : dir_(std::move(dir)),
        started_(UtcNow()),
        clock_(std::chrono::steady_clock::now()) {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) {
      throw OutputError("cannot create output directory '" + dir_.string() +
                        "'");
    }
  }

  bool enabled() const { return !dir_.empty(); }

  void Write(const std::string& name,
             const std::function<void(std::ostream&)>& body) {
    if (!enabled()) return;
    fs::path path = dir_ / name;
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw OutputError("cannot write '" + path.string() + "'");
    body(file);
    file.flush();
    if (!file) throw OutputError("write failed for '" + path.string() + "'");
    files_.push_back(name);
  }

  void Finish(const std::vector<std::string>& args, Json config, int jobs) {
    if (!enabled()) return;
    Json manifest = {{"tool", "eonsim"},
                     {"version", EONSIM_VERSION},
                     {"command", args.front()},
                     {"args", args},
                     {"config", std::move(config)},
                     {"outputs", files_}};
    Write("manifest.json",
          [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - clock_)
                               .count();
    Json metadata = {{"started_utc", started_},
                     {"finished_utc", UtcNow()},
                     {"elapsed_seconds", elapsed},
                     {"jobs", jobs}};
    Write("metadata.json",
          [&](std::ostream& out) { out << metadata.dump(2) << '\n'; });
  }

 private:
  fs::path dir_;
  std::string started_;
  std::chrono::steady_clock::time_point clock_;
  std::vector<std::string> files_;
};

void PrintSummary(std::ostream& out, std::string_view series,
                  const LoadSweepResult& sweep) {
  for (const LoadPoint& p : sweep.points) {
    out << series << "  load " << FormatNumber(p.load_erlangs) << "  sbp "
        << FormatNumber(p.mean_sbp) << " +/- " << FormatNumber(p.std_sbp)
        << "  (" << p.blocked_total << " blocked over " << p.trials
        << " trials)\n";
  }
}

void PrintWarnings(std::ostream& err, const LoadSweepResult& sweep) {
  for (const std::string& w : sweep.warnings) err << "warning: " << w << '\n';
}

int RunSweep(const SimulationFlags& f, const CommonFlags& c, std::ostream& out,
             std::ostream& err) {
  SimConfig config = Resolve(f);
  config.heuristic = RequireHeuristic(f.heuristic);
  const std::vector<double> loads = ParseLoads(f.loads);
  Artifacts artifacts(c.out);

  SweepOptions options;
  options.jobs = c.jobs;
  options.trial.record_outcomes = f.record_outcomes;
  LoadSweepResult sweep = Sweep(config, loads, options);
  PrintWarnings(err, sweep);
  const std::string series(ToString(config.heuristic));
  PrintSummary(out, series, sweep);

  artifacts.Write("trials.csv", [&](std::ostream& o) {
    WriteTrialsHeader(o);
    WriteTrialsRows(o, series, sweep);
  });
  artifacts.Write("summary.csv", [&](std::ostream& o) {
    WriteSummaryHeader(o);
    WriteSummaryRows(o, series, sweep);
  });
  if (f.record_outcomes) {
    artifacts.Write("outcomes.csv", [&](std::ostream& o) {
      WriteOutcomesHeader(o);
      WriteOutcomesRows(o, series, sweep);
    });
  }
  artifacts.Finish(CanonicalArgs("sweep", f, config), ConfigJson(config, loads),
                   c.jobs);
  return kExitOk;
}

int RunBound(const SimulationFlags& f, const CommonFlags& c, std::ostream& out,
             std::ostream& err) {
  SimConfig config = Resolve(f);
  std::vector<HeuristicKind> inner;
  if (f.heuristic == "auto") {
    inner = {HeuristicKind::kKspFf, HeuristicKind::kFfKsp};
  } else {
    inner = {RequireHeuristic(f.heuristic)};
    if (inner.front() != HeuristicKind::kKspFf &&
        inner.front() != HeuristicKind::kFfKsp) {
      throw ConfigError("bound needs --heuristic auto, ksp-ff or ff-ksp");
    }
  }
  if (!(f.target_sbp > 0.0 && f.target_sbp < 1.0)) {
    throw ConfigError("--target must lie in (0, 1)");
  }
  const std::vector<double> loads = ParseLoads(f.loads);
  Artifacts artifacts(c.out);

  SweepOptions options;
  options.jobs = c.jobs;
  options.trial.record_outcomes = f.record_outcomes;
  BoundSweepResult study =
      RunBoundStudy(config, loads, inner, f.target_sbp, options);
  config.heuristic = study.heuristic;
  PrintWarnings(err, study.heuristic_sweep);
  PrintWarnings(err, study.bound_sweep);
  const std::string series(ToString(study.heuristic));
  PrintSummary(out, series, study.heuristic_sweep);
  PrintSummary(out, "bound", study.bound_sweep);

  const CapacityGain& gain = study.gain;
  auto optional_json = [](const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
  };
  if (gain.relative_gain) {
    out << "capacity gain at sbp " << FormatNumber(gain.target_sbp) << ": "
        << FormatNumber(*gain.heuristic_load) << " -> "
        << FormatNumber(*gain.bound_load) << " Erlang ("
        << FormatNumber(100.0 * *gain.relative_gain) << "%)\n";
  } else {
    err << "warning: no capacity gain: " << gain.diagnostic << '\n';
  }

  artifacts.Write("trials.csv", [&](std::ostream& o) {
    WriteTrialsHeader(o);
    WriteTrialsRows(o, series, study.heuristic_sweep);
    WriteTrialsRows(o, "bound", study.bound_sweep);
  });
  artifacts.Write("summary.csv", [&](std::ostream& o) {
    WriteSummaryHeader(o);
    WriteSummaryRows(o, series, study.heuristic_sweep);
    WriteSummaryRows(o, "bound", study.bound_sweep);
  });
  if (f.record_outcomes) {
    artifacts.Write("outcomes.csv", [&](std::ostream& o) {
      WriteOutcomesHeader(o);
      WriteOutcomesRows(o, series, study.heuristic_sweep);
      WriteOutcomesRows(o, "bound", study.bound_sweep);
    });
  }
  artifacts.Write("gain.json", [&](std::ostream& o) {
    Json j = {{"target_sbp", gain.target_sbp},
              {"heuristic", series},
              {"heuristic_load", optional_json(gain.heuristic_load)},
              {"bound_load", optional_json(gain.bound_load)},
              {"relative_gain", optional_json(gain.relative_gain)},
              {"diagnostic", gain.diagnostic}};
    o << j.dump(2) << '\n';
  });
  artifacts.Finish(CanonicalArgs("bound", f, config), ConfigJson(config, loads),
                   c.jobs);
  return kExitOk;
}

struct WarmupFlags {
  std::string loads = "50:1000:50";
  int trials = 100;
  uint64_t seed = 0;
  double length_factor = 40.0;
};

int RunWarmup(const WarmupFlags& f, const CommonFlags& c, std::ostream& out) {
  if (f.trials < 1) throw ConfigError("--trials must be >= 1");
  if (!(f.length_factor > 0.0)) throw ConfigError("--length-factor must be > 0");
  const std::vector<double> loads = ParseLoads(f.loads);
  Artifacts artifacts(c.out);

  WarmupOptions options;
  options.base_seed = f.seed;
  options.length_factor = f.length_factor;
  options.jobs = c.jobs;
  WarmupStudyResult study = WarmupStudy(loads, f.trials, options);
  const std::vector<WarmupSummary>& summaries = study.summaries;
  out << "load_erlangs,q1,median,q3,whisker_low,whisker_high\n";
  for (const WarmupSummary& s : summaries) {
    out << FormatNumber(s.load_erlangs) << ',' << FormatNumber(s.q1) << ','
        << FormatNumber(s.median) << ',' << FormatNumber(s.q3) << ','
        << FormatNumber(s.whisker_low) << ',' << FormatNumber(s.whisker_high)
        << '\n';
  }
  if (loads.size() >= 2) {
    const LinearFit& fit = study.whisker_high_fit;
    out << "whisker_max_slope " << FormatNumber(fit.slope) << '\n'
        << "whisker_max_intercept " << FormatNumber(fit.intercept) << '\n';
  }

  artifacts.Write("warmup_summary.csv", [&](std::ostream& o) {
    o << "load_erlangs,q1,median,q3,whisker_low,whisker_high\n";
    for (const WarmupSummary& s : summaries) {
      o << FormatNumber(s.load_erlangs) << ',' << FormatNumber(s.q1) << ','
        << FormatNumber(s.median) << ',' << FormatNumber(s.q3) << ','
        << FormatNumber(s.whisker_low) << ',' << FormatNumber(s.whisker_high)
        << '\n';
    }
  });
  artifacts.Write("warmup_points.csv", [&](std::ostream& o) {
    o << "load_erlangs,truncation_point\n";
    for (const WarmupSummary& s : summaries) WriteWarmupRows(o, s);
  });
  std::vector<std::string> args = {
      "warmup", "--loads", f.loads, "--trials", std::to_string(f.trials),
      "--seed", std::to_string(f.seed), "--length-factor",
      FormatNumber(f.length_factor)};
  Json config = {{"loads_erlangs", loads},
                 {"trials", f.trials},
                 {"base_seed", f.seed},
                 {"mean_holding_time", options.mean_holding_time},
                 {"length_factor", options.length_factor},
                 {"min_requests", options.min_requests},
                 {"batch_size", options.batch_size}};
  artifacts.Finish(args, std::move(config), c.jobs);
  return kExitOk;
}

struct TruncationFlags {
  long long samples = 1000000;
  uint64_t seed = 0;
  double mean = 1.0;
};

int RunTruncationDemo(const TruncationFlags& f, std::ostream& out) {
  if (f.samples < 1) throw ConfigError("--samples must be >= 1");
  if (!(f.mean > 0.0)) throw ConfigError("--mean must be > 0");
  auto start = std::chrono::steady_clock::now();
  auto truncated_rng = MakeSubStream(f.seed, SubStream::kHolding);
  auto plain_rng = MakeSubStream(f.seed + 1, SubStream::kHolding);
  double truncated = 0.0;
  double plain = 0.0;
  for (long long i = 0; i < f.samples; ++i) {
    truncated += SampleHoldingTime(f.mean, true, truncated_rng);
    plain += SampleHoldingTime(f.mean, false, plain_rng);
  }
  truncated /= static_cast<double>(f.samples);
  plain /= static_cast<double>(f.samples);
  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  out << "samples " << f.samples << '\n'
      << "untruncated_mean " << FormatNumber(plain) << '\n'
      << "truncated_mean " << FormatNumber(truncated) << '\n'
      << "mean_ratio " << FormatNumber(truncated / f.mean) << '\n'
      << "expected_ratio " << FormatNumber(TruncatedHoldingMean(f.mean) / f.mean)
      << '\n'
      << "elapsed_seconds " << FormatNumber(elapsed) << '\n';
  return kExitOk;
}

struct PathFlags {
  std::string preset;
  std::string topology;
  int k = 5;
  std::string ordering = "hops";
};

int RunPaths(const PathFlags& f, const CommonFlags& c, std::ostream& out) {
  std::shared_ptr<const Topology> topology;
  if (!f.preset.empty()) {
    topology = LoadPresetTopology(RequirePreset(f.preset), f.topology);
  } else {
    if (f.topology.empty()) throw ConfigError("--topology is required");
    topology = std::make_shared<const Topology>(
        LoadTopologyFile(ResolveTopologyPath(f.topology)));
  }
  if (f.k < 1) throw ConfigError("--k must be >= 1");
  const PathOrdering ordering = RequireOrdering(f.ordering);
  Artifacts artifacts(c.out);
  PathTable table(*topology, f.k, ordering);

  const int n = topology->num_nodes();
  long long pairs = 0;
  size_t min_paths = std::numeric_limits<size_t>::max();
  size_t max_paths = 0;
  long long total = 0;
  double hops = 0.0;
  double km = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId d = 0; d < n; ++d) {
      if (s == d) continue;
      auto paths = table.Paths(s, d);
      ++pairs;
      min_paths = std::min(min_paths, paths.size());
      max_paths = std::max(max_paths, paths.size());
      for (const CandidatePath& p : paths) {
        ++total;
        hops += p.hop_count();
        km += p.length_km;
      }
    }
  }
  out << "topology " << topology->name() << '\n'
      << "ordered_pairs " << pairs << '\n'
      << "min_paths_per_pair " << (pairs ? min_paths : 0) << '\n'
      << "max_paths_per_pair " << max_paths << '\n'
      << "mean_hops " << FormatNumber(total ? hops / total : 0.0) << '\n'
      << "mean_km " << FormatNumber(total ? km / total : 0.0) << '\n';

  artifacts.Write("paths.csv", [&](std::ostream& o) {
    o << "source,destination,rank,hops,length_km,nodes\n";
    for (NodeId s = 0; s < n; ++s) {
      for (NodeId d = 0; d < n; ++d) {
        if (s == d) continue;
        for (const CandidatePath& p : table.Paths(s, d)) {
          o << topology->node_name(s) << ',' << topology->node_name(d) << ','
            << p.rank << ',' << p.hop_count() << ','
            << FormatNumber(p.length_km) << ',';
          for (size_t i = 0; i < p.nodes.size(); ++i) {
            o << (i ? "-" : "") << topology->node_name(p.nodes[i]);
          }
          o << '\n';
        }
      }
    }
  });
  std::vector<std::string> args = {"paths", "--topology",
                                   f.topology.empty() ? topology->name()
                                                      : f.topology,
                                   "--k", std::to_string(f.k), "--ordering",
                                   std::string(ToString(ordering))};
  if (!f.preset.empty()) {
    args.insert(args.begin() + 1, {"--preset", f.preset});
  }
  Json config = {{"topology", topology->name()},
                 {"nodes", n},
                 {"links", topology->num_links()},
                 {"k", f.k},
                 {"ordering", ToString(ordering)}};
  artifacts.Finish(args, std::move(config), c.jobs);
  return kExitOk;
}

int RunSelfCheck(std::ostream& out) {
  for (const ExperimentPreset& p : AllPresets()) {
    out << p.name << ": topologies";
    for (const auto& [label, file] : p.topologies) {
      out << ' ' << label;
      if (label != file) out << '(' << file << ')';
    }
    out << '\n';
  }
  bool ok = true;
  for (const PresetCheck& check : SelfCheck()) {
    out << (check.ok() ? "OK        " : "MISMATCH  ") << check.preset << ' '
        << check.setting << ": expected " << check.expected << ", resolved "
        << check.resolved << '\n';
    ok = ok && check.ok();
  }
  return ok ? kExitOk : kExitRuntime;
}

int RunRerun(const std::string& manifest_path, const std::string& out_dir,
             int jobs, std::ostream& out, std::ostream& err) {
  std::ifstream file(manifest_path);
  if (!file) throw ConfigError("cannot read manifest '" + manifest_path + "'");
  Json manifest;
  try {
    manifest = Json::parse(file);
  } catch (const Json::exception& e) {
    throw ConfigError("malformed manifest: " + std::string(e.what()));
  }
  if (!manifest.contains("args") || !manifest["args"].is_array() ||
      manifest["args"].empty()) {
    throw ConfigError("manifest has no args");
  }
  std::vector<std::string> args = manifest["args"].get<std::vector<std::string>>();
  if (args.front() == "rerun") throw ConfigError("manifest is a rerun");
  if (manifest.value("version", "") != EONSIM_VERSION) {
    err << "warning: manifest written by version "
        << manifest.value("version", "?") << ", running " << EONSIM_VERSION
        << '\n';
  }
  args.insert(args.end(), {"--out", out_dir, "--jobs", std::to_string(jobs)});
  return RunCli(args, out, err);
}

std::optional<double> ParseNumber(std::string_view text) {
  std::string s(text);
  if (s.empty()) return std::nullopt;
  size_t used = 0;
  double value;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (used != s.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

std::vector<double> ParseLoads(std::string_view text) {
  auto malformed = [&](const std::string& why) {
    return ConfigError("malformed --loads '" + std::string(text) + "': " + why);
  };
  std::vector<double> loads;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    size_t begin = 0;
    for (;;) {
      size_t colon = text.find(':', begin);
      parts.push_back(text.substr(begin, colon - begin));
      if (colon == std::string_view::npos) break;
      begin = colon + 1;
    }
    if (parts.size() != 3) throw malformed("expected start:stop:step");
    auto start = ParseNumber(parts[0]);
    auto stop = ParseNumber(parts[1]);
    auto step = ParseNumber(parts[2]);
    if (!start || !stop || !step) throw malformed("not a number");
    if (!(*step > 0.0)) throw malformed("step must be positive");
    if (*stop < *start) throw malformed("stop is below start");
    const double span = (*stop - *start) / *step;
    if (span > 1e6) throw malformed("too many points");
    const long long count = static_cast<long long>(std::floor(span + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) loads.push_back(*start + i * *step);
  } else {
    size_t begin = 0;
    for (;;) {
      size_t comma = text.find(',', begin);
      auto value = ParseNumber(text.substr(begin, comma - begin));
      if (!value) throw malformed("not a number");
      loads.push_back(*value);
      if (comma == std::string_view::npos) break;
      begin = comma + 1;
    }
  }
  for (size_t i = 0; i < loads.size(); ++i) {
    if (!(loads[i] > 0.0)) throw malformed("loads must be positive");
    if (i > 0 && !(loads[i] > loads[i - 1])) {
      throw malformed("loads must be strictly increasing");
    }
  }
  return loads;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Elastic optical network RMSA simulator", "eonsim"};
  app.set_version_flag("--version", EONSIM_VERSION);
  app.require_subcommand(1);

  SimulationFlags sweep_flags;
  CommonFlags sweep_common;
  CLI::App* sweep = app.add_subcommand("sweep", "Blocking probability vs load");
  AddSimulationFlags(sweep, sweep_flags, false);
  AddCommonFlags(sweep, sweep_common);

  SimulationFlags bound_flags;
  bound_flags.heuristic = "auto";
  CommonFlags bound_common;
  CLI::App* bound = app.add_subcommand(
      "bound", "Heuristic vs defragmentation bound and capacity gain");
  AddSimulationFlags(bound, bound_flags, true);
  AddCommonFlags(bound, bound_common);

  WarmupFlags warmup_flags;
  CommonFlags warmup_common;
  CLI::App* warmup =
      app.add_subcommand("warmup", "MSER-5 warm-up length vs load");
  warmup->add_option("--loads", warmup_flags.loads, "Loads in Erlang")
      ->capture_default_str();
  warmup->add_option("--trials", warmup_flags.trials, "Trials per load")
      ->capture_default_str();
  warmup->add_option("--seed", warmup_flags.seed, "Base seed")
      ->capture_default_str();
  warmup->add_option("--length-factor", warmup_flags.length_factor,
                     "Series length per Erlang")
      ->capture_default_str();
  AddCommonFlags(warmup, warmup_common);

  TruncationFlags truncation_flags;
  CLI::App* truncation = app.add_subcommand(
      "truncation-demo", "Mean of truncated vs plain exponential holding times");
  truncation->add_option("--samples", truncation_flags.samples)
      ->capture_default_str();
  truncation->add_option("--seed", truncation_flags.seed)
      ->capture_default_str();
  truncation->add_option("--mean", truncation_flags.mean)
      ->capture_default_str();

  PathFlags path_flags;
  CommonFlags path_common;
  CLI::App* paths = app.add_subcommand("paths", "K-shortest path statistics");
  paths->add_option("--preset", path_flags.preset,
                    "Apply a preset's topology labels");
  paths->add_option("--topology", path_flags.topology,
                    "Bundled name or file path");
  paths->add_option("--k", path_flags.k)->capture_default_str();
  paths->add_option("--ordering", path_flags.ordering)->capture_default_str();
  AddCommonFlags(paths, path_common);

  CLI::App* self_check = app.add_subcommand(
      "self-check", "Print resolved preset settings against published ones");
  self_check->alias("presets");

  std::string manifest;
  std::string rerun_out;
  int rerun_jobs = 0;
  CLI::App* rerun =
      app.add_subcommand("rerun", "Repeat the run recorded in a manifest");
  rerun->add_option("--manifest", manifest, "manifest.json")->required();
  rerun->add_option("--out", rerun_out, "Output directory")->required();
  rerun->add_option("--jobs", rerun_jobs)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << EONSIM_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*sweep) return RunSweep(sweep_flags, sweep_common, out, err);
    if (*bound) return RunBound(bound_flags, bound_common, out, err);
    if (*warmup) return RunWarmup(warmup_flags, warmup_common, out);
    if (*truncation) return RunTruncationDemo(truncation_flags, out);
    if (*paths) return RunPaths(path_flags, path_common, out);
    if (*self_check) return RunSelfCheck(out);
    if (*rerun) return RunRerun(manifest, rerun_out, rerun_jobs, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const TopologyError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace eonsim::cli
