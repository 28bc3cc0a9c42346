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

#ifndef COREFRINGE_EVALUATION_H_
#define COREFRINGE_EVALUATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corefringe/graph.h"
#include "corefringe/io.h"
#include "corefringe/ordering.h"
#include "corefringe/scoring.h"
#include "corefringe/split.h"
#include "corefringe/table.h"

namespace corefringe {

// One atomic prediction task: (u, v) is a test edge, (w, z) a core pair that
// is not an edge of the graph at any time. All four nodes are distinct core
// nodes.
struct EvalTuple {
  NodeIndex u = 0;
  NodeIndex v = 0;
  NodeIndex w = 0;
  NodeIndex z = 0;

  friend bool operator==(const EvalTuple&, const EvalTuple&) = default;
};

// Draws `count` positives uniformly with replacement from split.test and pairs
// each with a negative found by rejection sampling. Throws EvaluationError
// when there are no test edges or no usable core non-edge.
std::vector<EvalTuple> sample_tuples(const SplitResult& split,
                                     const CoreFringeGraph& g, std::size_t count,
                                     std::uint64_t seed);

// Accuracy at each grid level: (#{s(pos) > s(neg)} + 0.5 #{ties}) / |tuples|.
// Each tuple is swept once over the levels where one of its four neighbor
// lists changes, so the cost is O(sum of degrees + D) rather than
// O(|grid| * degree).
std::vector<double> evaluate_curve(const RankedAdjacency& adj,
                                   std::span<const EvalTuple> tuples,
                                   const DGrid& grid, ScoreKind score);

struct AccuracyCurve {
  std::vector<std::int64_t> d;
  std::vector<double> mean;
  std::vector<double> stddev;  // sample standard deviation over trials
  std::size_t trials = 0;
};

struct ExperimentConfig {
  SplitMode split = SplitMode::kTemporal;
  double test_fraction = 0.2;
  OrderingKind ordering = OrderingKind::kMostConnected;
  ScoreKind score = ScoreKind::kCommonNeighbors;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  GridMode grid = GridMode::kFull;
  // Positives per trial = tuples_per_test_edge * |test|.
  std::size_t tuples_per_test_edge = 10;
  // Group-level orderings only.
  const GroupTable* groups = nullptr;
  std::string core_group;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// Runs `trials` independent trials; trial i draws from derive_seed(seed, i).
// A temporal split is shared by all trials; holdout splits, random orderings
// and tuples are redrawn per trial. Output does not depend on `threads`.
AccuracyCurve run_experiment(const CoreFringeGraph& g,
                             const ExperimentConfig& config);

// Columns d,mean_accuracy,std_accuracy,trials,ordering,score,split.
Table curve_table(const AccuracyCurve& curve, OrderingKind ordering,
                  ScoreKind score, SplitMode split);

std::string_view to_string(SplitMode mode);

}  // namespace corefringe

#endif  // COREFRINGE_EVALUATION_H_
