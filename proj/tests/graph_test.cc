// Copyright 2026 The Corefringe Authors.
//
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


#include "corefringe/graph.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "corefringe/errors.h"
#include "corefringe/io.h"
#include "testing/oracle.h"

namespace corefringe {
namespace {

using testing::RawGraph;

std::vector<std::string> labels_of(const CoreFringeGraph& g, std::span<const NodeIndex> xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(g.label(x));
  return out;
}

CoreFringeGraph build(const std::vector<RawEdge>& edges, const std::vector<std::string>& core) {
  return CoreFringeGraph::build(edges, core);
}

TEST(BuildGraphTest, SelfLoopDroppedAndEarliestTimestampKept) {
  const auto g = build({{"a", "b", 5}, {"b", "a", 3}, {"a", "a", 1}}, {"a", "b"});
  EXPECT_EQ(g.num_nodes(), 2u);
  ASSERT_EQ(g.num_edges(), 1u);
  const Edge& e = g.edges()[0];
  EXPECT_EQ(g.label(e.u), "a");
  EXPECT_EQ(g.label(e.v), "b");
  EXPECT_EQ(e.timestamp, 3);
  EXPECT_EQ(g.diagnostics().self_loops_dropped, 1u);
  EXPECT_EQ(g.diagnostics().duplicates_merged, 1u);
}

TEST(BuildGraphTest, FringeFringeEdgeDroppedAndCounted) {
  const auto g = build({{"a", "x", 1}, {"x", "y", 2}}, {"a"});
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.role(g.index_of("a")), NodeRole::kCore);
  EXPECT_EQ(g.role(g.index_of("x")), NodeRole::kFringe);
  EXPECT_EQ(g.role(g.index_of("y")), NodeRole::kFringe);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(g.index_of("a"), g.index_of("x")));
  EXPECT_EQ(g.diagnostics().fringe_fringe_dropped, 1u);
  EXPECT_TRUE(g.core_core_edges().empty());
}

TEST(BuildGraphTest, EmptyCoreIsAnError) {
  EXPECT_THROW(build({{"a", "b", std::nullopt}}, {}), InvalidArgument);
}

TEST(BuildGraphTest, UnusedCoreLabelBecomesIsolatedCoreNode) {
  const auto g = build({{"a", "b", std::nullopt}}, {"a", "lonely"});
  const auto x = g.index_of("lonely");
  EXPECT_TRUE(g.is_core(x));
  EXPECT_TRUE(g.neighbors(x).empty());
}

TEST(BuildGraphTest, IndicesFollowFirstAppearanceCoreFirst) {
  const auto g = build({{"z", "y", std::nullopt}, {"q", "c2", std::nullopt}}, {"c1", "c2", "y"});
  EXPECT_EQ(g.label(0), "c1");
  EXPECT_EQ(g.label(1), "c2");
  EXPECT_EQ(g.label(2), "y");
  EXPECT_EQ(g.label(3), "z");
  EXPECT_EQ(g.label(4), "q");
}

TEST(BuildGraphTest, MixedTimedAndUntimedRejected) {
  EXPECT_THROW(build({{"a", "b", 1}, {"a", "c", std::nullopt}}, {"a"}), InvalidArgument);
}

TEST(BuildGraphTest, UntimedGraphReportsUntimed) {
  EXPECT_FALSE(build({{"a", "b", std::nullopt}}, {"a"}).timed());
  EXPECT_TRUE(build({{"a", "b", 4}}, {"a"}).timed());
}

TEST(NeighborsTest, PathMiddleNode) {
  const auto g = build({{"a", "b", std::nullopt}, {"b", "c", std::nullopt}}, {"a", "b", "c"});
  EXPECT_EQ(labels_of(g, g.neighbors(g.index_of("b"))),
            (std::vector<std::string>{"a", "c"}));
}

TEST(NeighborsTest, IsolatedNodeHasNone) {
  const auto g = build({{"a", "b", std::nullopt}}, {"a", "b", "i"});
  EXPECT_TRUE(g.neighbors(g.index_of("i")).empty());
}

TEST(NeighborsTest, StarCenter) {
  std::vector<RawEdge> edges;
  for (int i = 0; i < 7; ++i) edges.push_back({"hub", "leaf" + std::to_string(i), std::nullopt});
  const auto g = build(edges, {"hub"});
  EXPECT_EQ(g.neighbors(g.index_of("hub")).size(), 7u);
  EXPECT_EQ(g.degree(g.index_of("hub")), 7u);
}

TEST(NeighborsTest, UnknownNodeThrows) {
  const auto g = build({{"a", "b", std::nullopt}}, {"a"});
  EXPECT_THROW(g.neighbors(99), std::out_of_range);
  EXPECT_THROW(g.index_of("nope"), std::out_of_range);
  EXPECT_FALSE(g.find("nope").has_value());
}

TEST(BuildGraphTest, EnronShapedCounts) {
  const RawGraph raw = testing::enron_shaped(2026);
  const auto g = CoreFringeGraph::build(raw.edges, raw.core);
  EXPECT_EQ(g.num_core(), static_cast<std::size_t>(testing::kEnronCore));
  EXPECT_EQ(g.num_fringe(), static_cast<std::size_t>(testing::kEnronFringe));
  EXPECT_EQ(g.num_core_core_edges(), static_cast<std::size_t>(testing::kEnronCoreCore));
  EXPECT_EQ(g.core_core_edges().size(), static_cast<std::size_t>(testing::kEnronCoreCore));
  EXPECT_EQ(g.num_edges() - g.num_core_core_edges(),
            static_cast<std::size_t>(testing::kEnronCoreFringe));
}

// Cleans raw records independently of the library.
std::map<std::pair<std::string, std::string>, std::optional<Timestamp>> reference_edges(
    const RawGraph& raw) {
  const std::set<std::string> core(raw.core.begin(), raw.core.end());
  std::map<std::pair<std::string, std::string>, std::optional<Timestamp>> out;
  for (const auto& e : raw.edges) {
    if (e.u == e.v) continue;
    if (!core.count(e.u) && !core.count(e.v)) continue;
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = out.try_emplace({key.first, key.second}, e.timestamp);
    if (!fresh && e.timestamp && (!it->second || *e.timestamp < *it->second)) {
      it->second = e.timestamp;
    }
  }
  return out;
}

TEST(BuildGraphPropertyTest, RandomInputsMatchReferenceCleaning) {
  Rng rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    const RawGraph raw = testing::random_raw_graph(rng, 25, trial % 2 == 0);
    const auto g = CoreFringeGraph::build(raw.edges, raw.core);

    std::size_t degree_sum = 0;
    for (NodeIndex x = 0; x < g.num_nodes(); ++x) {
      degree_sum += g.degree(x);
      const auto nx = g.neighbors(x);
      ASSERT_TRUE(std::is_sorted(nx.begin(), nx.end()));
      for (auto y : nx) {
        ASSERT_TRUE(g.has_edge(y, x));
        const auto ny = g.neighbors(y);
        ASSERT_TRUE(std::binary_search(ny.begin(), ny.end(), x));
      }
    }
    ASSERT_EQ(degree_sum, 2 * g.num_edges());

    const auto expected = reference_edges(raw);
    ASSERT_EQ(g.num_edges(), expected.size());
    for (const auto& e : g.edges()) {
      ASSERT_LT(e.u, e.v);
      ASSERT_TRUE(g.is_core(e.u) || g.is_core(e.v));
      const auto key = std::minmax(g.label(e.u), g.label(e.v));
      const auto it = expected.find({key.first, key.second});
      ASSERT_NE(it, expected.end());
      ASSERT_EQ(e.timestamp, it->second);
    }
  }
}

// Label-level view of a graph: edges by label with timestamps, and the core.
using LabelView = std::pair<std::set<std::tuple<std::string, std::string, std::optional<Timestamp>>>,
                            std::set<std::string>>;

LabelView label_view(const CoreFringeGraph& g) {
  LabelView view;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(g.label(e.u), g.label(e.v));
    view.first.insert({key.first, key.second, e.timestamp});
  }
  for (auto c : g.core_nodes()) view.second.insert(g.label(c));
  return view;
}

CoreFringeGraph reload(const CoreFringeGraph& g) {
  std::stringstream edges;
  std::stringstream core;
  write_edges(edges, g);
  write_core(core, g);
  return CoreFringeGraph::build(parse_edges(edges), parse_core(core));
}

TEST(BuildGraphPropertyTest, IdempotentOnOwnSerialization) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const RawGraph raw = testing::random_raw_graph(rng, 30, trial % 2 == 1);
    const auto g = CoreFringeGraph::build(raw.edges, raw.core);
    const auto once = reload(g);
    ASSERT_EQ(label_view(once), label_view(g));
    std::stringstream a;
    std::stringstream b;
    write_edges(a, once);
    write_edges(b, reload(once));
    ASSERT_EQ(a.str(), b.str());
  }
}

}  // namespace
}  // namespace corefringe
