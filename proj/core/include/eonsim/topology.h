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

// Network topologies and pre-computed K-shortest candidate paths.
//
// A topology is a set of nodes joined by undirected edges ("links") with a
// length in km. Each link is materialized as one or two fibers depending on
// the fiber mode: dual-fiber links carry an independent fiber per direction,
// single-fiber links share one spectrum grid between both directions.

#ifndef EONSIM_TOPOLOGY_H_
#define EONSIM_TOPOLOGY_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eonsim {

using NodeId = int;
using LinkId = int;
using FiberId = int;

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FiberMode { kDual, kSingle };

std::string_view ToString(FiberMode mode);
std::optional<FiberMode> ParseFiberMode(std::string_view text);

struct Link {
  NodeId a = 0;
  NodeId b = 0;
  double length_km = 0.0;
};

class Topology {
 public:
  // Current topology file schema tag.
  static constexpr std::string_view kSchema = "eonsim.topology/1";

  Topology() = default;
  // Throws TopologyError on dangling node references, non-positive lengths,
  // self loops or duplicate edges.
  Topology(std::string name, std::vector<std::string> node_names,
           std::vector<Link> links, FiberMode fiber_mode, int slots_per_fiber);

  const std::string& name() const { return name_; }
  int num_nodes() const { return static_cast<int>(node_names_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  int num_fibers() const {
    return fiber_mode_ == FiberMode::kDual ? 2 * num_links() : num_links();
  }
  FiberMode fiber_mode() const { return fiber_mode_; }
  int slots_per_fiber() const { return slots_per_fiber_; }

  const std::vector<Link>& links() const { return links_; }
  const Link& link(LinkId id) const { return links_.at(id); }
  const std::string& node_name(NodeId id) const { return node_names_.at(id); }
  std::optional<NodeId> FindNode(std::string_view name) const;

  // Incident (neighbour, link) pairs, sorted by neighbour id.
  std::span<const std::pair<NodeId, LinkId>> Neighbors(NodeId node) const {
    return adjacency_[node];
  }
  std::optional<LinkId> LinkBetween(NodeId u, NodeId v) const;

  // Fiber carrying traffic over `link` when leaving `from`.
  FiberId FiberFor(LinkId link, NodeId from) const;

  // Copies with a different fiber mode or grid size; used by presets.
  Topology WithFiberMode(FiberMode mode) const;
  Topology WithSlots(int slots_per_fiber) const;

 private:
  std::string name_;
  std::vector<std::string> node_names_;
  std::vector<Link> links_;
  FiberMode fiber_mode_ = FiberMode::kDual;
  int slots_per_fiber_ = 0;
  std::vector<std::vector<std::pair<NodeId, LinkId>>> adjacency_;
  std::map<std::pair<NodeId, NodeId>, LinkId> link_index_;
};

// Parses a topology document (JSON, schema "eonsim.topology/1"):
//
//   {
//     "schema": "eonsim.topology/1",
//     "name": "nsfnet",
//     "fiber_mode": "dual",            // or "single"
//     "slots_per_fiber": 100,
//     "nodes": ["1", "2", ...],
//     "links": [{"a": "1", "b": "2", "length_km": 2100}, ...]
//   }
Topology ParseTopology(std::string_view document);
Topology LoadTopologyFile(const std::filesystem::path& path);
std::string SerializeTopology(const Topology& topology);

enum class PathOrdering { kKmThenHops, kHopsThenKm };

std::string_view ToString(PathOrdering ordering);
// Accepts "km" / "hops" as well as the long names.
std::optional<PathOrdering> ParsePathOrdering(std::string_view text);

struct CandidatePath {
  std::vector<NodeId> nodes;     // src ... dst
  std::vector<LinkId> links;     // links[i] joins nodes[i] and nodes[i + 1]
  std::vector<FiberId> fibers;   // directed fiber per hop
  double length_km = 0.0;
  int rank = 0;

  int hop_count() const { return static_cast<int>(links.size()); }
  NodeId source() const { return nodes.front(); }
  NodeId destination() const { return nodes.back(); }
};

// Strict weak order on (primary, secondary, node sequence) for an ordering.
bool PathLess(const CandidatePath& lhs, const CandidatePath& rhs,
              PathOrdering ordering);

// Loopless K-shortest paths from src to dst, best first under `ordering`.
// Returns fewer than k paths when fewer exist; empty for disconnected pairs.
std::vector<CandidatePath> KShortestPaths(const Topology& topology, NodeId src,
                                          NodeId dst, int k,
                                          PathOrdering ordering);

// Candidate lists for every ordered node pair, computed once.
class PathTable {
 public:
  PathTable(const Topology& topology, int k, PathOrdering ordering);

  std::span<const CandidatePath> Paths(NodeId src, NodeId dst) const {
    return paths_[static_cast<size_t>(src) * num_nodes_ + dst];
  }
  int k() const { return k_; }
  PathOrdering ordering() const { return ordering_; }
  int num_nodes() const { return num_nodes_; }

 private:
  int num_nodes_;
  int k_;
  PathOrdering ordering_;
  std::vector<std::vector<CandidatePath>> paths_;
};

}  // namespace eonsim

#endif  // EONSIM_TOPOLOGY_H_
