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

#include "corefringe/split.h"

#include <algorithm>
#include <cmath>

#include "corefringe/errors.h"
#include "corefringe/random.h"

namespace corefringe {
namespace {

void check_fraction(double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidArgument("test fraction must lie in (0, 1)");
  }
}

// floor(x) with a little slack so that e.g. 0.2 * 10 counts as 2.
std::size_t floor_count(double x) {
  return static_cast<std::size_t>(std::floor(x + 1e-9));
}

bool is_core_core(const CoreFringeGraph& g, const Edge& e) {
  return g.is_core(e.u) && g.is_core(e.v);
}

}  // namespace

SplitResult temporal_split(const CoreFringeGraph& g, double test_fraction) {
  check_fraction(test_fraction);
  if (!g.timed()) throw EvaluationError("temporal split requires timestamps");

  std::vector<Timestamp> times;
  for (const auto& e : g.edges()) {
    if (is_core_core(g, e)) times.push_back(*e.timestamp);
  }
  if (times.empty()) throw EvaluationError("graph has no core-core edges");
  std::sort(times.begin(), times.end());
  const std::size_t index =
      std::min(times.size() - 1,
               floor_count((1.0 - test_fraction) * static_cast<double>(times.size())));

  SplitResult split;
  split.mode = SplitMode::kTemporal;
  split.t_star = times[index];
  for (const auto& e : g.edges()) {
    if (*e.timestamp < *split.t_star) {
      split.train.push_back(e);
    } else if (is_core_core(g, e)) {
      split.test.push_back(e);
    }
  }
  return split;
}

SplitResult holdout_split(const CoreFringeGraph& g, double test_fraction,
                          std::uint64_t seed) {
  check_fraction(test_fraction);
  std::vector<std::size_t> core_core;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (is_core_core(g, edges[i])) core_core.push_back(i);
  }
  const std::size_t k =
      floor_count(test_fraction * static_cast<double>(core_core.size()));

  // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(core_core.size() - i));
    std::swap(core_core[i], core_core[j]);
  }
  std::vector<bool> in_test(edges.size(), false);
  for (std::size_t i = 0; i < k; ++i) in_test[core_core[i]] = true;

  SplitResult split;
  split.mode = SplitMode::kHoldout;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    (in_test[i] ? split.test : split.train).push_back(edges[i]);
  }
  return split;
}

}  // namespace corefringe
