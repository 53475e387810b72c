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

#include "eonsim/topology.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

namespace eonsim {

namespace {

using json = nlohmann::json;

// Lengths are sums of doubles; treat sums within this many km as equal.
constexpr double kKmTolerance = 1e-6;

int CompareKm(double a, double b) {
  if (std::abs(a - b) <= kKmTolerance) return 0;
  return a < b ? -1 : 1;
}

// Lexicographic (primary, secondary) cost. For hop ordering primary is the
// hop count and secondary the km length; for km ordering the reverse.
struct Cost {
  double primary = 0.0;
  double secondary = 0.0;

  Cost operator+(const Cost& o) const {
    return {primary + o.primary, secondary + o.secondary};
  }
};

int CompareCost(const Cost& a, const Cost& b) {
  if (int c = CompareKm(a.primary, b.primary); c != 0) return c;
  return CompareKm(a.secondary, b.secondary);
}

Cost EdgeCost(const Link& link, PathOrdering ordering) {
  return ordering == PathOrdering::kHopsThenKm ? Cost{1.0, link.length_km}
                                               : Cost{link.length_km, 1.0};
}

Cost PathCost(const CandidatePath& path, PathOrdering ordering) {
  return ordering == PathOrdering::kHopsThenKm
             ? Cost{static_cast<double>(path.hop_count()), path.length_km}
             : Cost{path.length_km, static_cast<double>(path.hop_count())};
}

std::string NodeName(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw TopologyError("node names must be strings or integers");
}

CandidatePath MakePath(const Topology& topology, std::vector<NodeId> nodes) {
  CandidatePath path;
  path.nodes = std::move(nodes);
  for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    LinkId link = *topology.LinkBetween(path.nodes[i], path.nodes[i + 1]);
    path.links.push_back(link);
    path.fibers.push_back(topology.FiberFor(link, path.nodes[i]));
    path.length_km += topology.link(link).length_km;
  }
  return path;
}

// Shortest path under the composite cost, skipping banned nodes and links.
std::optional<std::vector<NodeId>> ShortestPath(
    const Topology& topology, NodeId src, NodeId dst, PathOrdering ordering,
    const std::vector<char>& banned_nodes,
    const std::vector<char>& banned_links) {
  const int n = topology.num_nodes();
  std::vector<std::optional<Cost>> dist(n);
  std::vector<NodeId> parent(n, -1);
  std::vector<char> done(n, 0);

  struct Entry {
    Cost cost;
    NodeId node;
  };
  auto worse = [](const Entry& x, const Entry& y) {
    int c = CompareCost(x.cost, y.cost);
    return c != 0 ? c > 0 : x.node > y.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
  dist[src] = Cost{};
  queue.push({Cost{}, src});
  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (done[top.node]) continue;
    done[top.node] = 1;
    if (top.node == dst) break;
    for (auto [next, link] : topology.Neighbors(top.node)) {
      if (banned_nodes[next] || banned_links[link] || done[next]) continue;
      Cost candidate = top.cost + EdgeCost(topology.link(link), ordering);
      if (!dist[next] || CompareCost(candidate, *dist[next]) < 0) {
        dist[next] = candidate;
        parent[next] = top.node;
        queue.push({candidate, next});
      }
    }
  }
  if (!done[dst]) return std::nullopt;
  std::vector<NodeId> nodes;
  for (NodeId v = dst; v != -1; v = parent[v]) nodes.push_back(v);
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace

std::string_view ToString(FiberMode mode) {
  return mode == FiberMode::kDual ? "dual" : "single";
}

std::optional<FiberMode> ParseFiberMode(std::string_view text) {
  if (text == "dual") return FiberMode::kDual;
  if (text == "single") return FiberMode::kSingle;
  return std::nullopt;
}

std::string_view ToString(PathOrdering ordering) {
  return ordering == PathOrdering::kHopsThenKm ? "hops" : "km";
}

std::optional<PathOrdering> ParsePathOrdering(std::string_view text) {
  if (text == "hops" || text == "hops-then-km") return PathOrdering::kHopsThenKm;
  if (text == "km" || text == "km-then-hops") return PathOrdering::kKmThenHops;
  return std::nullopt;
}

Topology::Topology(std::string name, std::vector<std::string> node_names,
                   std::vector<Link> links, FiberMode fiber_mode,
                   int slots_per_fiber)
    : name_(std::move(name)),
      node_names_(std::move(node_names)),
      links_(std::move(links)),
      fiber_mode_(fiber_mode),
      slots_per_fiber_(slots_per_fiber) {
  if (slots_per_fiber_ <= 0) {
    throw TopologyError("slots_per_fiber must be positive");
  }
  const int n = num_nodes();
  std::set<std::string> unique_names(node_names_.begin(), node_names_.end());
  if (static_cast<int>(unique_names.size()) != n) {
    throw TopologyError("duplicate node name");
  }
  adjacency_.assign(n, {});
  for (LinkId id = 0; id < num_links(); ++id) {
    const Link& link = links_[id];
    if (link.a < 0 || link.a >= n || link.b < 0 || link.b >= n) {
      throw TopologyError("link " + std::to_string(id) +
                          " references an unknown node");
    }
    if (link.a == link.b) {
      throw TopologyError("link " + std::to_string(id) + " is a self loop");
    }
    if (!(link.length_km > 0.0) || !std::isfinite(link.length_km)) {
      throw TopologyError("link " + std::to_string(id) +
                          " has a non-positive length");
    }
    auto key = std::minmax(link.a, link.b);
    if (!link_index_.emplace(key, id).second) {
      throw TopologyError("duplicate link between " + node_names_[link.a] +
                          " and " + node_names_[link.b]);
    }
    adjacency_[link.a].emplace_back(link.b, id);
    adjacency_[link.b].emplace_back(link.a, id);
  }
  for (auto& neighbors : adjacency_) std::sort(neighbors.begin(), neighbors.end());
}

std::optional<NodeId> Topology::FindNode(std::string_view name) const {
  for (NodeId i = 0; i < num_nodes(); ++i) {
    if (node_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<LinkId> Topology::LinkBetween(NodeId u, NodeId v) const {
  auto it = link_index_.find(std::minmax(u, v));
  if (it == link_index_.end()) return std::nullopt;
  return it->second;
}

FiberId Topology::FiberFor(LinkId link, NodeId from) const {
  if (fiber_mode_ == FiberMode::kSingle) return link;
  return 2 * link + (links_[link].a == from ? 0 : 1);
}

Topology Topology::WithFiberMode(FiberMode mode) const {
  return Topology(name_, node_names_, links_, mode, slots_per_fiber_);
}

Topology Topology::WithSlots(int slots_per_fiber) const {
  return Topology(name_, node_names_, links_, fiber_mode_, slots_per_fiber);
}

Topology ParseTopology(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw TopologyError(std::string("topology parse error: ") + e.what());
  }
  try {
    if (doc.value("schema", std::string()) != Topology::kSchema) {
      throw TopologyError("unsupported topology schema, expected " +
                          std::string(Topology::kSchema));
    }
    auto mode = ParseFiberMode(doc.value("fiber_mode", std::string("dual")));
    if (!mode) throw TopologyError("fiber_mode must be \"dual\" or \"single\"");

    std::vector<std::string> names;
    std::map<std::string, NodeId> ids;
    for (const json& node : doc.at("nodes")) {
      std::string name = NodeName(node);
      ids.emplace(name, static_cast<NodeId>(names.size()));
      names.push_back(std::move(name));
    }
    std::vector<Link> links;
    for (const json& entry : doc.at("links")) {
      auto resolve = [&](const char* key) {
        std::string name = NodeName(entry.at(key));
        auto it = ids.find(name);
        if (it == ids.end()) {
          throw TopologyError("link references unknown node \"" + name + "\"");
        }
        return it->second;
      };
      Link link;
      link.a = resolve("a");
      link.b = resolve("b");
      link.length_km = entry.at("length_km").get<double>();
      links.push_back(link);
    }
    return Topology(doc.value("name", std::string()), std::move(names),
                    std::move(links), *mode, doc.at("slots_per_fiber").get<int>());
  } catch (const json::exception& e) {
    throw TopologyError(std::string("malformed topology: ") + e.what());
  }
}

Topology LoadTopologyFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TopologyError("cannot open topology file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTopology(buffer.str());
}

std::string SerializeTopology(const Topology& topology) {
  json doc;
  doc["schema"] = Topology::kSchema;
  doc["name"] = topology.name();
  doc["fiber_mode"] = ToString(topology.fiber_mode());
  doc["slots_per_fiber"] = topology.slots_per_fiber();
  json nodes = json::array();
  for (NodeId i = 0; i < topology.num_nodes(); ++i) {
    nodes.push_back(topology.node_name(i));
  }
  doc["nodes"] = nodes;
  json links = json::array();
  for (const Link& link : topology.links()) {
    links.push_back({{"a", topology.node_name(link.a)},
                     {"b", topology.node_name(link.b)},
                     {"length_km", link.length_km}});
  }
  doc["links"] = links;
  return doc.dump(2);
}

bool PathLess(const CandidatePath& lhs, const CandidatePath& rhs,
              PathOrdering ordering) {
  int c = CompareCost(PathCost(lhs, ordering), PathCost(rhs, ordering));
  if (c != 0) return c < 0;
  return lhs.nodes < rhs.nodes;
}

// Yen's algorithm under the composite cost. Once k paths are known, keeps
// enumerating every path that ties the k-th on cost, so the final sort by
// node sequence picks a deterministic, globally minimal set.
std::vector<CandidatePath> KShortestPaths(const Topology& topology, NodeId src,
                                          NodeId dst, int k,
                                          PathOrdering ordering) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (src == dst) throw std::invalid_argument("source equals destination");
  const int n = topology.num_nodes();
  if (src < 0 || src >= n || dst < 0 || dst >= n) {
    throw std::out_of_range("node id out of range");
  }

  std::vector<char> banned_nodes(n, 0);
  std::vector<char> banned_links(topology.num_links(), 0);
  auto first = ShortestPath(topology, src, dst, ordering, banned_nodes,
                            banned_links);
  if (!first) return {};

  auto candidate_less = [ordering](const CandidatePath& a,
                                   const CandidatePath& b) {
    return PathLess(a, b, ordering);
  };
  std::vector<CandidatePath> accepted;
  std::set<std::vector<NodeId>> seen;
  std::set<CandidatePath, decltype(candidate_less)> candidates(candidate_less);

  accepted.push_back(MakePath(topology, *first));
  seen.insert(accepted.back().nodes);

  for (;;) {
    const CandidatePath& last = accepted.back();
    for (size_t spur = 0; spur + 1 < last.nodes.size(); ++spur) {
      std::fill(banned_nodes.begin(), banned_nodes.end(), 0);
      std::fill(banned_links.begin(), banned_links.end(), 0);
      for (size_t i = 0; i < spur; ++i) banned_nodes[last.nodes[i]] = 1;
      for (const CandidatePath& path : accepted) {
        if (path.nodes.size() > spur + 1 &&
            std::equal(path.nodes.begin(), path.nodes.begin() + spur + 1,
                       last.nodes.begin())) {
          banned_links[path.links[spur]] = 1;
        }
      }
      auto tail = ShortestPath(topology, last.nodes[spur], dst, ordering,
                               banned_nodes, banned_links);
      if (!tail) continue;
      std::vector<NodeId> nodes(last.nodes.begin(), last.nodes.begin() + spur);
      nodes.insert(nodes.end(), tail->begin(), tail->end());
      if (seen.insert(nodes).second) {
        candidates.insert(MakePath(topology, std::move(nodes)));
      }
    }
    if (candidates.empty()) break;
    auto best = candidates.begin();
    if (static_cast<int>(accepted.size()) >= k) {
      Cost kth = PathCost(accepted.back(), ordering);
      if (CompareCost(PathCost(*best, ordering), kth) > 0) break;
    }
    accepted.push_back(*best);
    candidates.erase(best);
  }

  std::sort(accepted.begin(), accepted.end(), candidate_less);
  if (static_cast<int>(accepted.size()) > k) accepted.resize(k);
  for (int i = 0; i < static_cast<int>(accepted.size()); ++i) {
    accepted[i].rank = i;
  }
  return accepted;
}

PathTable::PathTable(const Topology& topology, int k, PathOrdering ordering)
    : num_nodes_(topology.num_nodes()), k_(k), ordering_(ordering) {
  paths_.resize(static_cast<size_t>(num_nodes_) * num_nodes_);
  for (NodeId s = 0; s < num_nodes_; ++s) {
    for (NodeId d = 0; d < num_nodes_; ++d) {
      if (s == d) continue;
      paths_[static_cast<size_t>(s) * num_nodes_ + d] =
          KShortestPaths(topology, s, d, k, ordering);
    }
  }
}

}  // namespace eonsim
