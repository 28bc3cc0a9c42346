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

#ifndef COREFRINGE_GRAPH_H_
#define COREFRINGE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace corefringe {

// Dense node index, contiguous from 0. Labels map to indices bijectively.
using NodeIndex = std::uint32_t;
using Timestamp = std::int64_t;

enum class NodeRole : std::uint8_t { kCore, kFringe };

// One line of an edge file before any cleaning.
struct RawEdge {
  std::string u;
  std::string v;
  std::optional<Timestamp> timestamp;

  friend bool operator==(const RawEdge&, const RawEdge&) = default;
};

// Canonical undirected edge: u < v by index.
struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  std::optional<Timestamp> timestamp;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Counts of records discarded or merged while building a graph.
struct BuildDiagnostics {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
  std::size_t fringe_fringe_dropped = 0;
};

// Immutable simple undirected graph whose nodes are labelled core or fringe.
// Every edge has at least one core endpoint; adjacency lists are sorted by
// node index. Safe to share across threads once built.
class CoreFringeGraph {
 public:
  // Cleans `edges` into a simple graph: self-loops dropped, direction
  // discarded, duplicate pairs merged keeping the earliest timestamp, and
  // fringe-fringe edges dropped. Node indices follow first appearance, core
  // labels first. Core labels that never occur in an edge become isolated core
  // nodes. Throws InvalidArgument on an empty core or on a mix of timed and
  // untimed records.
  static CoreFringeGraph build(std::span<const RawEdge> edges,
                               std::span<const std::string> core_labels);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_core() const { return core_nodes_.size(); }
  std::size_t num_fringe() const { return num_nodes() - num_core(); }

  NodeRole role(NodeIndex x) const;
  bool is_core(NodeIndex x) const { return role(x) == NodeRole::kCore; }
  const std::string& label(NodeIndex x) const;

  std::optional<NodeIndex> find(std::string_view label) const;
  // Throws std::out_of_range for unknown labels.
  NodeIndex index_of(std::string_view label) const;

  // Sorted by index. Throws std::out_of_range for unknown nodes.
  std::span<const NodeIndex> neighbors(NodeIndex x) const;
  std::size_t degree(NodeIndex x) const { return neighbors(x).size(); }
  bool has_edge(NodeIndex x, NodeIndex y) const;

  // Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  std::vector<Edge> core_core_edges() const;
  std::size_t num_core_core_edges() const { return num_core_core_; }

  std::span<const NodeIndex> core_nodes() const { return core_nodes_; }
  std::span<const NodeIndex> fringe_nodes() const { return fringe_nodes_; }

  // True when the graph has edges and every edge carries a timestamp.
  bool timed() const { return timed_; }

  const BuildDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  CoreFringeGraph() = default;

  void check_node(NodeIndex x) const;

  std::vector<std::string> labels_;
  std::vector<NodeRole> roles_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<NodeIndex> core_nodes_;
  std::vector<NodeIndex> fringe_nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeIndex> adjacency_;
  std::size_t num_core_core_ = 0;
  bool timed_ = false;
  BuildDiagnostics diagnostics_;
};

}  // namespace corefringe

#endif  // COREFRINGE_GRAPH_H_
