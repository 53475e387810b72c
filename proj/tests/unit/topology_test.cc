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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "eonsim/presets.h"
#include "oracles.h"

namespace eonsim {
namespace {

using ::eonsim::testing::AllSimplePaths;
using ::eonsim::testing::MakeTopology;
using ::eonsim::testing::RandomConnectedTopology;

// A=0, B=1, C=2, D=3.
Topology Diamond() {
  return MakeTopology(4, {{0, 1, 100}, {1, 3, 100}, {0, 2, 300}, {2, 3, 300},
                          {0, 3, 500}});
}

std::vector<std::vector<NodeId>> NodeLists(
    const std::vector<CandidatePath>& paths) {
  std::vector<std::vector<NodeId>> out;
  for (const CandidatePath& p : paths) out.push_back(p.nodes);
  return out;
}

TEST(TopologyTest, BundledCounts) {
  struct Expect {
    const char* name;
    int nodes;
    int links;
  };
  for (Expect e : {Expect{"nsfnet", 14, 22}, Expect{"cost239", 11, 25},
                   Expect{"usnet", 24, 43}, Expect{"jpn48", 48, 82}}) {
    Topology t = LoadTopologyFile(ResolveTopologyPath(e.name));
    EXPECT_EQ(t.num_nodes(), e.nodes) << e.name;
    EXPECT_EQ(t.num_links(), e.links) << e.name;
  }
}

TEST(TopologyTest, MinimalDocument) {
  Topology t = ParseTopology(R"({"schema": "eonsim.topology/1", "name": "two",
      "fiber_mode": "single", "slots_per_fiber": 4, "nodes": ["X", "Y"],
      "links": [{"a": "X", "b": "Y", "length_km": 100}]})");
  EXPECT_EQ(t.num_nodes(), 2);
  EXPECT_EQ(t.num_links(), 1);
  EXPECT_EQ(t.num_fibers(), 1);
  EXPECT_DOUBLE_EQ(t.link(0).length_km, 100.0);
}

TEST(TopologyTest, RejectsDanglingNode) {
  EXPECT_THROW(ParseTopology(R"({"schema": "eonsim.topology/1",
      "slots_per_fiber": 4, "nodes": ["X", "Y"],
      "links": [{"a": "X", "b": "Z", "length_km": 100}]})"),
               TopologyError);
}

TEST(TopologyTest, RejectsBadLinks) {
  EXPECT_THROW(MakeTopology(2, {{0, 1, 0.0}}), TopologyError);
  EXPECT_THROW(MakeTopology(2, {{0, 0, 5.0}}), TopologyError);
  EXPECT_THROW(MakeTopology(2, {{0, 1, 5.0}, {1, 0, 6.0}}), TopologyError);
  EXPECT_THROW(ParseTopology("{not json"), TopologyError);
}

TEST(TopologyTest, SerializeRoundTrip) {
  Topology t = Diamond();
  Topology back = ParseTopology(SerializeTopology(t));
  EXPECT_EQ(SerializeTopology(back), SerializeTopology(t));
  EXPECT_EQ(back.num_links(), 5);
}

TEST(TopologyTest, FiberModes) {
  Topology dual = MakeTopology(3, {{0, 1, 1}, {1, 2, 1}}, FiberMode::kDual);
  EXPECT_EQ(dual.num_fibers(), 4);
  EXPECT_NE(dual.FiberFor(0, 0), dual.FiberFor(0, 1));
  Topology single = dual.WithFiberMode(FiberMode::kSingle);
  EXPECT_EQ(single.num_fibers(), 2);
  EXPECT_EQ(single.FiberFor(1, 1), single.FiberFor(1, 2));
}

TEST(KShortestPathsTest, DiamondKm) {
  auto paths = KShortestPaths(Diamond(), 0, 3, 3, PathOrdering::kKmThenHops);
  std::vector<std::vector<NodeId>> expected = {{0, 1, 3}, {0, 3}, {0, 2, 3}};
  EXPECT_EQ(NodeLists(paths), expected);
  EXPECT_DOUBLE_EQ(paths[0].length_km, 200);
  EXPECT_DOUBLE_EQ(paths[1].length_km, 500);
  EXPECT_DOUBLE_EQ(paths[2].length_km, 600);
}

TEST(KShortestPathsTest, DiamondHops) {
  auto paths = KShortestPaths(Diamond(), 0, 3, 3, PathOrdering::kHopsThenKm);
  std::vector<std::vector<NodeId>> expected = {{0, 3}, {0, 1, 3}, {0, 2, 3}};
  EXPECT_EQ(NodeLists(paths), expected);
  EXPECT_EQ(paths[0].rank, 0);
  EXPECT_EQ(paths[2].rank, 2);
}

TEST(KShortestPathsTest, SingleLinkHasOnePath) {
  auto paths = KShortestPaths(MakeTopology(2, {{0, 1, 10}}), 0, 1, 5,
                              PathOrdering::kHopsThenKm);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].hop_count(), 1);
}

TEST(KShortestPathsTest, DisconnectedIsEmpty) {
  Topology t = MakeTopology(4, {{0, 1, 1}, {2, 3, 1}});
  EXPECT_TRUE(KShortestPaths(t, 0, 3, 2, PathOrdering::kKmThenHops).empty());
  EXPECT_THROW(KShortestPaths(t, 0, 0, 2, PathOrdering::kKmThenHops),
               std::invalid_argument);
  EXPECT_THROW(KShortestPaths(t, 0, 1, 0, PathOrdering::kKmThenHops),
               std::invalid_argument);
}

TEST(KShortestPathsTest, PathFieldsConsistent) {
  Topology t = Diamond();
  for (const CandidatePath& p :
       KShortestPaths(t, 0, 3, 3, PathOrdering::kKmThenHops)) {
    double km = 0.0;
    for (size_t i = 0; i < p.links.size(); ++i) {
      const Link& link = t.link(p.links[i]);
      km += link.length_km;
      EXPECT_EQ(p.fibers[i], t.FiberFor(p.links[i], p.nodes[i]));
    }
    EXPECT_DOUBLE_EQ(p.length_km, km);
    EXPECT_EQ(p.nodes.size(), p.links.size() + 1);
  }
}

// Property: equals exhaustive enumeration, is prefix-stable in k and sorted
// by the primary key.
TEST(KShortestPathsTest, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(20240611);
  for (int instance = 0; instance < 1000; ++instance) {
    Topology t = RandomConnectedTopology(rng, 6, 4);
    std::uniform_int_distribution<int> node(0, t.num_nodes() - 1);
    NodeId s = node(rng);
    NodeId d = node(rng);
    if (s == d) d = (s + 1) % t.num_nodes();
    for (PathOrdering ordering :
         {PathOrdering::kHopsThenKm, PathOrdering::kKmThenHops}) {
      auto oracle = AllSimplePaths(t, s, d, ordering);
      const int k = std::uniform_int_distribution<int>(1, 12)(rng);
      auto paths = KShortestPaths(t, s, d, k, ordering);
      ASSERT_EQ(paths.size(), std::min<size_t>(k, oracle.size()));
      for (size_t i = 0; i < paths.size(); ++i) {
        ASSERT_EQ(paths[i].nodes, oracle[i].nodes)
            << "instance " << instance << " rank " << i;
        if (i > 0 && ordering == PathOrdering::kHopsThenKm) {
          EXPECT_LE(paths[i - 1].hop_count(), paths[i].hop_count());
        }
        if (i > 0 && ordering == PathOrdering::kKmThenHops) {
          EXPECT_LE(paths[i - 1].length_km, paths[i].length_km);
        }
      }
      auto longer = KShortestPaths(t, s, d, k + 1, ordering);
      ASSERT_GE(longer.size(), paths.size());
      for (size_t i = 0; i < paths.size(); ++i) {
        ASSERT_EQ(longer[i].nodes, paths[i].nodes);
      }
    }
  }
}

TEST(PathTableTest, MatchesDirectComputation) {
  Topology t = Diamond();
  PathTable table(t, 2, PathOrdering::kKmThenHops);
  for (NodeId s = 0; s < 4; ++s) {
    for (NodeId d = 0; d < 4; ++d) {
      if (s == d) continue;
      auto direct = KShortestPaths(t, s, d, 2, PathOrdering::kKmThenHops);
      auto cached = table.Paths(s, d);
      ASSERT_EQ(cached.size(), direct.size());
      for (size_t i = 0; i < direct.size(); ++i) {
        EXPECT_EQ(cached[i].nodes, direct[i].nodes);
      }
    }
  }
}

TEST(PathOrderingTest, Parse) {
  EXPECT_EQ(ParsePathOrdering("km"), PathOrdering::kKmThenHops);
  EXPECT_EQ(ParsePathOrdering("hops"), PathOrdering::kHopsThenKm);
  EXPECT_FALSE(ParsePathOrdering("miles").has_value());
}

}  // namespace
}  // namespace eonsim
