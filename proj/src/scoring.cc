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

#include "corefringe/scoring.h"

#include <algorithm>

#include "corefringe/errors.h"

namespace corefringe {

RankedAdjacency::RankedAdjacency(const CoreFringeGraph& g,
                                 std::span<const Edge> train,
                                 const FringeOrdering& ordering) {
  const std::size_t n = g.num_nodes();
  constexpr Rank kUnranked = -1;
  rank_.assign(n, kUnranked);
  for (NodeIndex x : g.core_nodes()) rank_[x] = 0;
  for (std::size_t i = 0; i < ordering.units.size(); ++i) {
    for (NodeIndex x : ordering.units[i]) {
      if (x >= n || g.is_core(x)) {
        throw InvalidArgument("ordering unit contains a non-fringe node");
      }
      if (rank_[x] != kUnranked) {
        throw InvalidArgument("fringe node '" + g.label(x) +
                              "' appears in two units");
      }
      rank_[x] = static_cast<Rank>(i + 1);
    }
  }
  for (NodeIndex x : g.fringe_nodes()) {
    if (rank_[x] == kUnranked) {
      throw InvalidArgument("fringe node '" + g.label(x) + "' is not ordered");
    }
  }
  num_units_ = static_cast<Rank>(ordering.units.size());

  offsets_.assign(n + 1, 0);
  for (const auto& e : train) {
    if (e.u >= n || e.v >= n) throw InvalidArgument("train edge outside graph");
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : train) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::sort(adjacency_.begin() + offsets_[x], adjacency_.begin() + offsets_[x + 1],
              [this](NodeIndex a, NodeIndex b) { return before(a, b); });
  }
}

std::span<const NodeIndex> RankedAdjacency::neighbors(NodeIndex x) const {
  if (x >= num_nodes()) throw std::out_of_range("unknown node");
  return std::span<const NodeIndex>(adjacency_).subspan(
      offsets_[x], offsets_[x + 1] - offsets_[x]);
}

std::span<const NodeIndex> RankedAdjacency::neighbors_at(NodeIndex x,
                                                         Rank d) const {
  auto all = neighbors(x);
  auto end = std::partition_point(all.begin(), all.end(),
                                  [&](NodeIndex s) { return rank_[s] <= d; });
  return all.first(static_cast<std::size_t>(end - all.begin()));
}

std::string_view to_string(ScoreKind kind) {
  return kind == ScoreKind::kJaccard ? "jaccard" : "cn";
}

int compare(const JaccardRatio& a, const JaccardRatio& b) {
  // An empty union is 0/1.
  const std::int64_t da = a.union_size == 0 ? 1 : a.union_size;
  const std::int64_t db = b.union_size == 0 ? 1 : b.union_size;
  const std::int64_t lhs = a.intersection * db;
  const std::int64_t rhs = b.intersection * da;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

namespace {

void check_pair(const RankedAdjacency& adj, NodeIndex x, NodeIndex y) {
  if (x == y) throw InvalidArgument("score requires two distinct nodes");
  if (!adj.is_core(x) || !adj.is_core(y)) {
    throw InvalidArgument("scores are defined for core pairs only");
  }
}

std::int64_t intersect_size(const RankedAdjacency& adj,
                            std::span<const NodeIndex> a,
                            std::span<const NodeIndex> b) {
  std::int64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) {
      ++count;
      ++i;
      ++j;
    } else if (adj.before(*i, *j)) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

std::int64_t common_neighbors_at(const RankedAdjacency& adj, NodeIndex x,
                                 NodeIndex y, Rank d) {
  check_pair(adj, x, y);
  return intersect_size(adj, adj.neighbors_at(x, d), adj.neighbors_at(y, d));
}

JaccardRatio jaccard_ratio_at(const RankedAdjacency& adj, NodeIndex x,
                              NodeIndex y, Rank d) {
  check_pair(adj, x, y);
  const auto nx = adj.neighbors_at(x, d);
  const auto ny = adj.neighbors_at(y, d);
  const std::int64_t common = intersect_size(adj, nx, ny);
  return {common, static_cast<std::int64_t>(nx.size() + ny.size()) - common};
}

double jaccard_at(const RankedAdjacency& adj, NodeIndex x, NodeIndex y, Rank d) {
  return jaccard_ratio_at(adj, x, y, d).value();
}

}  // namespace corefringe
