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

#ifndef COREFRINGE_SPLIT_H_
#define COREFRINGE_SPLIT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "corefringe/graph.h"

namespace corefringe {

enum class SplitMode { kTemporal, kHoldout };

struct SplitResult {
  SplitMode mode = SplitMode::kTemporal;
  std::vector<Edge> train;
  // Core-core edges only.
  std::vector<Edge> test;
  // Set in temporal mode.
  std::optional<Timestamp> t_star;
};

// t_star is the core-core timestamp at 0-based sorted index
// floor((1 - test_fraction) * m). Test = core-core edges with t >= t_star;
// train = every edge (any endpoint roles) with t < t_star. Core-fringe edges
// at or after t_star are in neither set.
SplitResult temporal_split(const CoreFringeGraph& g, double test_fraction = 0.2);

// Test = floor(test_fraction * m) core-core edges sampled uniformly without
// replacement; train = all remaining edges.
SplitResult holdout_split(const CoreFringeGraph& g, double test_fraction,
                          std::uint64_t seed);

}  // namespace corefringe

#endif  // COREFRINGE_SPLIT_H_
