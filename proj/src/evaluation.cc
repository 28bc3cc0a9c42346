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

#include "corefringe/evaluation.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "corefringe/errors.h"
#include "corefringe/random.h"

namespace corefringe {

std::vector<EvalTuple> sample_tuples(const SplitResult& split,
                                     const CoreFringeGraph& g, std::size_t count,
                                     std::uint64_t seed) {
  if (split.test.empty()) throw EvaluationError("no test edges to sample from");
  const auto core = g.core_nodes();
  const std::size_t n = core.size();
  if (n < 4) throw EvaluationError("need at least four core nodes");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2;
  const double non_edges = pairs - static_cast<double>(g.num_core_core_edges());
  if (non_edges < 1) throw EvaluationError("core is complete: no negative pairs");
  // Expected draws per negative is about pairs / non_edges; this cap makes a
  // spurious failure astronomically unlikely.
  const double cap = 64.0 * std::ceil(pairs / non_edges) + 1000.0;
  const auto max_attempts = static_cast<std::uint64_t>(
      std::min(cap, static_cast<double>(std::numeric_limits<std::uint32_t>::max())));

  Rng rng(seed);
  std::vector<EvalTuple> tuples;
  tuples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Edge& pos = split.test[rng.uniform_index(split.test.size())];
    EvalTuple t{pos.u, pos.v, 0, 0};
    bool found = false;
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
      const NodeIndex w = core[rng.uniform_index(n)];
      const NodeIndex z = core[rng.uniform_index(n)];
      if (w == z || w == t.u || w == t.v || z == t.u || z == t.v) continue;
      if (g.has_edge(w, z)) continue;
      t.w = std::min(w, z);
      t.z = std::max(w, z);
      found = true;
      break;
    }
    if (!found) {
      throw EvaluationError("no core non-edge disjoint from test edge (" +
                            g.label(t.u) + ", " + g.label(t.v) + ")");
    }
    tuples.push_back(t);
  }
  return tuples;
}

namespace {

// Score state of one candidate pair during a level sweep.
struct PairSweep {
  std::span<const NodeIndex> a;
  std::span<const NodeIndex> b;
  std::size_t ia = 0;
  std::size_t ib = 0;
  std::int64_t common = 0;

  Rank next_rank(const RankedAdjacency& adj) const {
    Rank r = std::numeric_limits<Rank>::max();
    if (ia < a.size()) r = std::min(r, adj.rank(a[ia]));
    if (ib < b.size()) r = std::min(r, adj.rank(b[ib]));
    return r;
  }

  // Consumes every neighbor of rank exactly r. Common neighbors share a rank,
  // so they meet inside the two blocks.
  void advance(const RankedAdjacency& adj, Rank r) {
    const std::size_t a_end = block_end(adj, a, ia, r);
    const std::size_t b_end = block_end(adj, b, ib, r);
    std::size_t i = ia;
    std::size_t j = ib;
    while (i < a_end && j < b_end) {
      if (a[i] == b[j]) {
        ++common;
        ++i;
        ++j;
      } else if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    ia = a_end;
    ib = b_end;
  }

  JaccardRatio jaccard() const {
    return {common, static_cast<std::int64_t>(ia + ib) - common};
  }

  static std::size_t block_end(const RankedAdjacency& adj,
                               std::span<const NodeIndex> list, std::size_t from,
                               Rank r) {
    while (from < list.size() && adj.rank(list[from]) == r) ++from;
    return from;
  }
};

// 2 = correct, 1 = tie, 0 = wrong.
int outcome(const PairSweep& pos, const PairSweep& neg, ScoreKind score) {
  int c = 0;
  if (score == ScoreKind::kCommonNeighbors) {
    c = pos.common < neg.common ? -1 : (pos.common > neg.common ? 1 : 0);
  } else {
    c = compare(pos.jaccard(), neg.jaccard());
  }
  return c + 1;
}

}  // namespace

std::vector<double> evaluate_curve(const RankedAdjacency& adj,
                                   std::span<const EvalTuple> tuples,
                                   const DGrid& grid, ScoreKind score) {
  if (tuples.empty()) throw EvaluationError("no tuples to evaluate");
  const Rank max_level = adj.num_units();
  for (auto d : grid.values) {
    if (d < 0 || d > max_level) {
      throw InvalidArgument("grid level " + std::to_string(d) + " outside [0, " +
                            std::to_string(max_level) + "]");
    }
  }

  // Outcomes are piecewise constant in d; record their changes and integrate.
  std::vector<std::int64_t> delta(static_cast<std::size_t>(max_level) + 2, 0);
  for (const auto& t : tuples) {
    PairSweep pos{adj.neighbors(t.u), adj.neighbors(t.v)};
    PairSweep neg{adj.neighbors(t.w), adj.neighbors(t.z)};
    int previous = 0;
    Rank level = 0;
    while (level <= max_level) {
      pos.advance(adj, level);
      neg.advance(adj, level);
      const int now = outcome(pos, neg, score);
      delta[level] += now - previous;
      previous = now;
      level = std::min(pos.next_rank(adj), neg.next_rank(adj));
    }
  }

  std::vector<std::int64_t> half_points(delta.size(), 0);
  std::int64_t running = 0;
  for (std::size_t d = 0; d < delta.size(); ++d) {
    running += delta[d];
    half_points[d] = running;
  }
  const double denom = 2.0 * static_cast<double>(tuples.size());
  std::vector<double> accuracy;
  accuracy.reserve(grid.values.size());
  for (auto d : grid.values) {
    accuracy.push_back(static_cast<double>(half_points[d]) / denom);
  }
  return accuracy;
}

namespace {

std::vector<double> run_trial(const CoreFringeGraph& g,
                              const ExperimentConfig& config,
                              const SplitResult* shared_split, const DGrid& grid,
                              std::size_t trial) {
  const std::uint64_t trial_seed = derive_seed(config.seed, trial);
  SplitResult own_split;
  if (shared_split == nullptr) {
    own_split = holdout_split(g, config.test_fraction, derive_seed(trial_seed, 0));
  }
  const SplitResult& split = shared_split ? *shared_split : own_split;

  FringeOrdering ordering;
  const std::uint64_t ordering_seed = derive_seed(trial_seed, 1);
  if (config.groups != nullptr) {
    ordering = order_groups(g, split.train, *config.groups, config.core_group,
                            config.ordering, ordering_seed);
  } else if (config.ordering == OrderingKind::kMostConnected) {
    ordering = order_most_connected(g, split.train);
  } else {
    ordering = order_random(g, ordering_seed);
  }

  const RankedAdjacency adj(g, split.train, ordering);
  const auto tuples = sample_tuples(split, g,
                                    config.tuples_per_test_edge * split.test.size(),
                                    derive_seed(trial_seed, 2));
  return evaluate_curve(adj, tuples, grid, config.score);
}

}  // namespace

AccuracyCurve run_experiment(const CoreFringeGraph& g,
                             const ExperimentConfig& config) {
  if (config.trials == 0) throw InvalidArgument("trials must be positive");
  if (config.tuples_per_test_edge == 0) {
    throw InvalidArgument("tuples per test edge must be positive");
  }
  const bool group_level = config.ordering == OrderingKind::kMostUsers ||
                           config.ordering == OrderingKind::kProximity;
  if (group_level && config.groups == nullptr) {
    throw InvalidArgument(std::string(to_string(config.ordering)) +
                          " ordering requires group membership");
  }

  std::int64_t units = static_cast<std::int64_t>(g.num_fringe());
  if (config.groups != nullptr) {
    // The group count does not depend on the split; probe it once.
    units = static_cast<std::int64_t>(
        order_groups(g, {}, *config.groups, config.core_group,
                     OrderingKind::kMostUsers)
            .size());
  }
  const DGrid grid = make_dgrid(units, config.grid);

  std::optional<SplitResult> shared;
  if (config.split == SplitMode::kTemporal) {
    shared = temporal_split(g, config.test_fraction);
  }

  std::vector<std::vector<double>> results(config.trials);
  std::vector<std::exception_ptr> errors(config.trials);
  unsigned workers = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, config.trials));
  auto work = [&](unsigned worker) {
    for (std::size_t trial = worker; trial < config.trials; trial += workers) {
      try {
        results[trial] =
            run_trial(g, config, shared ? &*shared : nullptr, grid, trial);
      } catch (...) {
        errors[trial] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  AccuracyCurve curve;
  curve.trials = config.trials;
  curve.d = grid.values;
  const auto n = static_cast<double>(config.trials);
  for (std::size_t k = 0; k < grid.values.size(); ++k) {
    double sum = 0;
    for (const auto& r : results) sum += r[k];
    const double mean = sum / n;
    double ss = 0;
    for (const auto& r : results) ss += (r[k] - mean) * (r[k] - mean);
    curve.mean.push_back(mean);
    curve.stddev.push_back(config.trials > 1 ? std::sqrt(ss / (n - 1)) : 0.0);
  }
  return curve;
}

std::string_view to_string(SplitMode mode) {
  return mode == SplitMode::kHoldout ? "holdout" : "temporal";
}

Table curve_table(const AccuracyCurve& curve, OrderingKind ordering,
                  ScoreKind score, SplitMode split) {
  Table table;
  table.columns = {"d",     "mean_accuracy", "std_accuracy", "trials",
                   "ordering", "score",      "split"};
  for (std::size_t k = 0; k < curve.d.size(); ++k) {
    table.rows.push_back({curve.d[k], curve.mean[k], curve.stddev[k],
                          static_cast<std::int64_t>(curve.trials),
                          std::string(to_string(ordering)),
                          std::string(to_string(score)), std::string(to_string(split))});
  }
  return table;
}

}  // namespace corefringe
