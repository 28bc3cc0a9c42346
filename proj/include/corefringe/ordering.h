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

#ifndef COREFRINGE_ORDERING_H_
#define COREFRINGE_ORDERING_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corefringe/graph.h"
#include "corefringe/io.h"

namespace corefringe {

enum class OrderingKind { kMostConnected, kRandom, kMostUsers, kProximity };

std::string_view to_string(OrderingKind kind);

// Sequence of disjoint fringe units. Level d of the nested vertex sets is the
// core plus the first d units. Node-level orderings use singleton units.
struct FringeOrdering {
  OrderingKind kind = OrderingKind::kMostConnected;
  std::vector<std::vector<NodeIndex>> units;
  // Node label for node-level orderings, group label for group-level ones.
  std::vector<std::string> unit_labels;

  std::size_t size() const { return units.size(); }
};

// Decreasing degree in (V, train); ties by ascending label.
FringeOrdering order_most_connected(const CoreFringeGraph& g,
                                    std::span<const Edge> train);

FringeOrdering order_random(const CoreFringeGraph& g, std::uint64_t seed);

// Orders every non-core group that has at least one node in `g`. Requires a
// group for every node and that `core_group` holds exactly the core.
//   kMostConnected  decreasing count of train edges between C and the group
//   kMostUsers      decreasing number of the group's nodes in g
//   kProximity      increasing great-circle distance to the core group center
//   kRandom         uniform permutation drawn from `seed`
// Ties by ascending group label.
FringeOrdering order_groups(const CoreFringeGraph& g, std::span<const Edge> train,
                            const GroupTable& groups,
                            const std::string& core_group, OrderingKind kind,
                            std::uint64_t seed = 0);

inline constexpr double kEarthRadiusKm = 6371.0;

// Haversine distance in kilometers on a sphere of radius kEarthRadiusKm.
double haversine_km(double lat1, double lon1, double lat2, double lon2);

enum class GridMode { kFull, kGeometric };

// Inclusion levels at which curves are evaluated: strictly increasing, always
// containing 0 and the unit count.
struct DGrid {
  std::vector<std::int64_t> values;

  std::int64_t max() const { return values.back(); }
};

// kFull: 0..units. kGeometric: 0..min(9, units), then round(9 * 1.25^k)
// below `units`, then `units`.
DGrid make_dgrid(std::int64_t units, GridMode mode);

}  // namespace corefringe

#endif  // COREFRINGE_ORDERING_H_
