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

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "corefringe/errors.h"

namespace corefringe {

CoreFringeGraph CoreFringeGraph::build(
    std::span<const RawEdge> edges, std::span<const std::string> core_labels) {
  if (core_labels.empty()) throw InvalidArgument("empty core");

  CoreFringeGraph g;
  auto intern = [&g](const std::string& label, NodeRole role) {
    auto [it, inserted] =
        g.index_.try_emplace(label, static_cast<NodeIndex>(g.labels_.size()));
    if (inserted) {
      g.labels_.push_back(label);
      g.roles_.push_back(role);
    }
    return it->second;
  };
  for (const auto& label : core_labels) intern(label, NodeRole::kCore);

  std::size_t timed_records = 0;
  for (const auto& e : edges) {
    if (e.timestamp) ++timed_records;
  }
  if (timed_records != 0 && timed_records != edges.size()) {
    throw InvalidArgument("mixed timed and untimed edge records");
  }

  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const auto& e : edges) {
    const NodeIndex a = intern(e.u, NodeRole::kFringe);
    const NodeIndex b = intern(e.v, NodeRole::kFringe);
    if (a == b) {
      ++g.diagnostics_.self_loops_dropped;
      continue;
    }
    if (g.roles_[a] == NodeRole::kFringe && g.roles_[b] == NodeRole::kFringe) {
      ++g.diagnostics_.fringe_fringe_dropped;
      continue;
    }
    canonical.push_back({std::min(a, b), std::max(a, b), e.timestamp});
  }

  // Sorting puts the earliest timestamp first within each pair.
  std::sort(canonical.begin(), canonical.end(),
            [](const Edge& x, const Edge& y) {
              return std::tie(x.u, x.v, x.timestamp) <
                     std::tie(y.u, y.v, y.timestamp);
            });
  for (const auto& e : canonical) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u &&
        g.edges_.back().v == e.v) {
      ++g.diagnostics_.duplicates_merged;
      continue;
    }
    g.edges_.push_back(e);
  }

  const std::size_t n = g.labels_.size();
  for (NodeIndex x = 0; x < n; ++x) {
    (g.roles_[x] == NodeRole::kCore ? g.core_nodes_ : g.fringe_nodes_)
        .push_back(x);
  }

  g.offsets_.assign(n + 1, 0);
  for (const auto& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    if (g.roles_[e.u] == NodeRole::kCore && g.roles_[e.v] == NodeRole::kCore) {
      ++g.num_core_core_;
    }
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::sort(g.adjacency_.begin() + g.offsets_[x],
              g.adjacency_.begin() + g.offsets_[x + 1]);
  }

  g.timed_ = !g.edges_.empty() && timed_records == edges.size();
  return g;
}

void CoreFringeGraph::check_node(NodeIndex x) const {
  if (x >= labels_.size()) {
    throw std::out_of_range("unknown node index " + std::to_string(x));
  }
}

NodeRole CoreFringeGraph::role(NodeIndex x) const {
  check_node(x);
  return roles_[x];
}

const std::string& CoreFringeGraph::label(NodeIndex x) const {
  check_node(x);
  return labels_[x];
}

std::optional<NodeIndex> CoreFringeGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex CoreFringeGraph::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found) throw std::out_of_range("unknown node '" + std::string(label) + "'");
  return *found;
}

std::span<const NodeIndex> CoreFringeGraph::neighbors(NodeIndex x) const {
  check_node(x);
  return std::span<const NodeIndex>(adjacency_).subspan(
      offsets_[x], offsets_[x + 1] - offsets_[x]);
}

bool CoreFringeGraph::has_edge(NodeIndex x, NodeIndex y) const {
  auto nx = neighbors(x);
  auto ny = neighbors(y);
  if (nx.size() > ny.size()) {
    std::swap(nx, ny);
    std::swap(x, y);
  }
  return std::binary_search(nx.begin(), nx.end(), y);
}

std::vector<Edge> CoreFringeGraph::core_core_edges() const {
  std::vector<Edge> out;
  out.reserve(num_core_core_);
  for (const auto& e : edges_) {
    if (roles_[e.u] == NodeRole::kCore && roles_[e.v] == NodeRole::kCore) {
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace corefringe
