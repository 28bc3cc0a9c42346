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

#include "corefringe/ordering.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "corefringe/errors.h"
#include "corefringe/random.h"

namespace corefringe {
namespace {

FringeOrdering singleton_ordering(const CoreFringeGraph& g, OrderingKind kind,
                                  const std::vector<NodeIndex>& nodes) {
  FringeOrdering ordering;
  ordering.kind = kind;
  ordering.units.reserve(nodes.size());
  ordering.unit_labels.reserve(nodes.size());
  for (NodeIndex x : nodes) {
    ordering.units.push_back({x});
    ordering.unit_labels.push_back(g.label(x));
  }
  return ordering;
}

struct GroupUnit {
  std::string label;
  std::vector<NodeIndex> nodes;
  double key = 0;  // sort key, ascending
};

}  // namespace

std::string_view to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::kMostConnected:
      return "most-connected";
    case OrderingKind::kRandom:
      return "random";
    case OrderingKind::kMostUsers:
      return "most-users";
    case OrderingKind::kProximity:
      return "proximity";
  }
  return "unknown";
}

FringeOrdering order_most_connected(const CoreFringeGraph& g,
                                    std::span<const Edge> train) {
  std::vector<std::size_t> degree(g.num_nodes(), 0);
  for (const auto& e : train) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<NodeIndex> nodes(g.fringe_nodes().begin(), g.fringe_nodes().end());
  std::sort(nodes.begin(), nodes.end(), [&](NodeIndex a, NodeIndex b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return g.label(a) < g.label(b);
  });
  return singleton_ordering(g, OrderingKind::kMostConnected, nodes);
}

FringeOrdering order_random(const CoreFringeGraph& g, std::uint64_t seed) {
  std::vector<NodeIndex> nodes(g.fringe_nodes().begin(), g.fringe_nodes().end());
  Rng rng(seed);
  shuffle(nodes, rng);
  return singleton_ordering(g, OrderingKind::kRandom, nodes);
}

FringeOrdering order_groups(const CoreFringeGraph& g, std::span<const Edge> train,
                            const GroupTable& groups,
                            const std::string& core_group, OrderingKind kind,
                            std::uint64_t seed) {
  std::map<std::string, std::vector<NodeIndex>> members;
  std::vector<std::string> group_of(g.num_nodes());
  for (NodeIndex x = 0; x < g.num_nodes(); ++x) {
    auto group = groups.group_of(g.label(x));
    if (!group) {
      throw InvalidArgument("node '" + g.label(x) + "' has no group");
    }
    if ((*group == core_group) != g.is_core(x)) {
      throw InvalidArgument("group '" + core_group +
                            "' must contain exactly the core nodes (node '" +
                            g.label(x) + "')");
    }
    group_of[x] = *group;
    if (!g.is_core(x)) members[*group].push_back(x);
  }

  std::vector<GroupUnit> units;
  for (auto& [label, nodes] : members) {
    units.push_back({label, std::move(nodes), 0.0});
  }

  switch (kind) {
    case OrderingKind::kMostConnected: {
      std::map<std::string, double> links;
      for (const auto& e : train) {
        if (g.is_core(e.u) != g.is_core(e.v)) {
          links[group_of[g.is_core(e.u) ? e.v : e.u]] += 1.0;
        }
      }
      for (auto& unit : units) unit.key = -links[unit.label];
      break;
    }
    case OrderingKind::kMostUsers:
      for (auto& unit : units) unit.key = -static_cast<double>(unit.nodes.size());
      break;
    case OrderingKind::kProximity: {
      auto core_center = groups.center(core_group);
      if (!core_center) {
        throw InvalidArgument("proximity ordering requires coordinates for group '" +
                              core_group + "'");
      }
      for (auto& unit : units) {
        auto center = groups.center(unit.label);
        if (!center) {
          throw InvalidArgument(
              "proximity ordering requires coordinates for group '" + unit.label +
              "'");
        }
        unit.key = haversine_km(core_center->latitude, core_center->longitude,
                                center->latitude, center->longitude);
      }
      break;
    }
    case OrderingKind::kRandom:
      break;
  }

  if (kind == OrderingKind::kRandom) {
    Rng rng(seed);
    shuffle(units, rng);
  } else {
    std::stable_sort(units.begin(), units.end(),
                     [](const GroupUnit& a, const GroupUnit& b) {
                       if (a.key != b.key) return a.key < b.key;
                       return a.label < b.label;
                     });
  }

  FringeOrdering ordering;
  ordering.kind = kind;
  for (auto& unit : units) {
    ordering.unit_labels.push_back(unit.label);
    ordering.units.push_back(std::move(unit.nodes));
  }
  return ordering;
}

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  auto check = [](double lat, double lon) {
    if (!(lat >= -90 && lat <= 90) || !(lon >= -180 && lon <= 180)) {
      throw InvalidArgument("coordinate out of range");
    }
  };
  check(lat1, lon1);
  check(lat2, lon2);
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * kRad;
  const double dlon = (lon2 - lon1) * kRad;
  const double s1 = std::sin(dlat / 2);
  const double s2 = std::sin(dlon / 2);
  const double h = s1 * s1 + std::cos(lat1 * kRad) * std::cos(lat2 * kRad) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(std::min(1.0, h)));
}

DGrid make_dgrid(std::int64_t units, GridMode mode) {
  if (units < 0) throw InvalidArgument("unit count must be non-negative");
  DGrid grid;
  if (mode == GridMode::kFull) {
    grid.values.resize(static_cast<std::size_t>(units) + 1);
    for (std::int64_t d = 0; d <= units; ++d) grid.values[d] = d;
    return grid;
  }
  for (std::int64_t d = 0; d <= std::min<std::int64_t>(9, units); ++d) {
    grid.values.push_back(d);
  }
  for (int k = 1;; ++k) {
    const auto d = static_cast<std::int64_t>(std::llround(9.0 * std::pow(1.25, k)));
    if (d >= units) break;
    if (d > grid.values.back()) grid.values.push_back(d);
  }
  if (grid.values.back() != units) grid.values.push_back(units);
  return grid;
}

}  // namespace corefringe
