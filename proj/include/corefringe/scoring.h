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

#ifndef COREFRINGE_SCORING_H_
#define COREFRINGE_SCORING_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "corefringe/graph.h"
#include "corefringe/ordering.h"

namespace corefringe {

using Rank = std::int64_t;

// Training adjacency with every node tagged by its inclusion rank: 0 for the
// core, i for the members of the i-th fringe unit. Each neighbor list is
// sorted by (rank, index), so the neighbors visible at level d are a prefix.
//
// Restricting to rank <= d is the same as working on the subgraph of train
// edges induced by C plus the first d units.
class RankedAdjacency {
 public:
  // Throws InvalidArgument unless `ordering` partitions the fringe of `g`.
  RankedAdjacency(const CoreFringeGraph& g, std::span<const Edge> train,
                  const FringeOrdering& ordering);

  std::size_t num_nodes() const { return rank_.size(); }
  // Number of units D; the deepest meaningful level.
  Rank num_units() const { return num_units_; }
  Rank rank(NodeIndex x) const { return rank_.at(x); }
  bool is_core(NodeIndex x) const { return rank(x) == 0; }

  std::span<const NodeIndex> neighbors(NodeIndex x) const;
  // Neighbors with rank <= d.
  std::span<const NodeIndex> neighbors_at(NodeIndex x, Rank d) const;

  // (rank, index) order used by neighbor lists.
  bool before(NodeIndex a, NodeIndex b) const {
    return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
  }

 private:
  std::vector<Rank> rank_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeIndex> adjacency_;
  Rank num_units_ = 0;
};

enum class ScoreKind { kCommonNeighbors, kJaccard };

std::string_view to_string(ScoreKind kind);

// Intersection over union kept as integers so comparisons are exact. An empty
// union scores 0.
struct JaccardRatio {
  std::int64_t intersection = 0;
  std::int64_t union_size = 0;

  double value() const {
    return union_size == 0 ? 0.0
                           : static_cast<double>(intersection) /
                                 static_cast<double>(union_size);
  }
};

// Returns <0, 0, >0 as a is less than, equal to, greater than b.
int compare(const JaccardRatio& a, const JaccardRatio& b);

// Both require distinct core nodes (InvalidArgument otherwise). Levels beyond
// num_units() behave like num_units().
std::int64_t common_neighbors_at(const RankedAdjacency& adj, NodeIndex x,
                                 NodeIndex y, Rank d);
JaccardRatio jaccard_ratio_at(const RankedAdjacency& adj, NodeIndex x,
                              NodeIndex y, Rank d);
double jaccard_at(const RankedAdjacency& adj, NodeIndex x, NodeIndex y, Rank d);

}  // namespace corefringe

#endif  // COREFRINGE_SCORING_H_
