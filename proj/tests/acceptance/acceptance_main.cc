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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. argv[1] is the path of the corefringe binary.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corefringe/evaluation.h"
#include "corefringe/graph.h"
#include "corefringe/lattice.h"
#include "corefringe/ordering.h"
#include "corefringe/sbm.h"
#include "corefringe/scoring.h"
#include "corefringe/split.h"
#include "testing/oracle.h"

namespace corefringe {
namespace {

namespace fs = std::filesystem;

// Pinned tolerances and limits.
constexpr double kSnrTolerance = 1e-6;
constexpr double kLimitTolerance = 1e-12;
constexpr double kSaturation = 0.02;
constexpr double kStandardErrors = 3.0;
constexpr std::size_t kMonteCarloSamples = 100000;
constexpr int kMonteCarloSettings = 10;
constexpr int kOracleGraphs = 1000;
constexpr int kOracleMaxNodes = 50;
constexpr double kPipelineGain = 0.02;
constexpr int kPipelineSeeds = 20;
constexpr double kFastSeconds = 1.0;
constexpr double kMonteCarloSeconds = 30.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kPipelineSeconds = 120.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool strictly_monotone(const std::vector<double>& v, bool increasing) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (increasing ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1])) return false;
  }
  return true;
}

Outcome sbm_no_fringe() {
  Outcome o;
  const SbmParams params{0.5, 0.3, 0.2, 0.2, 10, 500};
  const auto curve = sbm_snr_curve(params, make_dgrid(500, GridMode::kFull));
  o.require(strictly_monotone(curve, false), "SNR not strictly decreasing");
  o.require(std::abs(curve[0] - 0.755929) <= kSnrTolerance, "SNR(0) = " + fmt(curve[0]));
  o.detail = o.ok ? "SNR(0) = " + fmt(curve[0]) + ", SNR(500) = " + fmt(curve[500]) : o.detail;
  return o;
}

Outcome sbm_all_fringe() {
  Outcome o;
  const SbmParams params{0.5, 0.3, 0.2, 0.0, 10, 500};
  const auto curve = sbm_snr_curve(params, make_dgrid(500, GridMode::kFull));
  const auto check = check_all_fringe(params);
  o.require(strictly_monotone(curve, true), "SNR not strictly increasing");
  o.require(check.condition_value == 6.75 && check.holds,
            "condition value " + fmt(check.condition_value));
  o.require(curve[500] > 2 * curve[0], "SNR(500) = " + fmt(curve[500]));
  o.detail = o.ok ? "condition 6.75, SNR(500)/SNR(0) = " + fmt(curve[500] / curve[0])
                  : o.detail;
  return o;
}

Outcome sbm_enough_fringe() {
  Outcome o;
  const SbmParams params{0.5, 0.3, 0.2, 0.1, 10, 500};
  const auto curve = sbm_snr_curve(params, make_dgrid(500, GridMode::kFull));
  const auto argmin = std::min_element(curve.begin(), curve.end()) - curve.begin();
  const double d0 = enough_fringe_diagnostics(params).d0;
  o.require(argmin == 50 || argmin == 51, "argmin " + std::to_string(argmin));
  o.require(std::any_of(curve.begin(), curve.end(), [&](double v) { return v > curve[0]; }),
            "no d with SNR(d) > SNR(0)");
  o.detail = o.ok ? "argmin " + std::to_string(argmin) + ", d0 = " + fmt(d0) : o.detail;
  return o;
}

Outcome lattice_limits() {
  Outcome o;
  o.require(std::abs(limit_expectation(2) - 2.5) <= kLimitTolerance,
            "limit_expectation(2) = " + fmt(limit_expectation(2)));
  o.require(std::abs(positivity_margin(2, 3) - 5.0 / 12.0) <= kLimitTolerance,
            "positivity_margin(2, 3) = " + fmt(positivity_margin(2, 3)));
  double smallest = INFINITY;
  for (std::int64_t a = 2; a <= 12; ++a) {
    for (std::int64_t b = a + 1; b <= 12; ++b) {
      const LatticeConfig cfg{12, -12 + a, 12 - b, 1.0};
      smallest = std::min(smallest, limit_snr(cfg, 1e-8).z_star);
    }
  }
  o.require(smallest > 0, "Z_star = " + fmt(smallest));
  o.detail = o.ok ? "min Z_star over 2 <= a < b <= 12 = " + fmt(smallest) : o.detail;
  return o;
}

Outcome lattice_fig5() {
  Outcome o;
  const DGrid grid = make_dgrid(12, GridMode::kFull);
  std::string optima;
  for (std::int64_t a = 2; a <= 6; ++a) {
    const LatticeConfig cfg{10, -10 + a, 1, 1.0};
    const auto curve = lattice_snr_curve(cfg, grid);
    const auto best = find_optimal_d(grid, curve);
    const std::string tag = "a = " + std::to_string(a) + ": ";
    o.require(curve[1] > curve[0], tag + "SNR(1) <= SNR(0)");
    o.require(best.is_interior, tag + "argmax " + std::to_string(best.d_star));
    const double change = std::abs(curve[12] - curve[8]) / curve[8];
    o.require(change < kSaturation, tag + "relative change " + fmt(change));
    optima += (optima.empty() ? "" : ",") + std::to_string(best.d_star);
  }
  o.detail = o.ok ? "d* = " + optima : o.detail;
  return o;
}

bool within(const SampleStats& s, double expected, bool variance) {
  const double se = variance ? s.variance_stderr() : s.mean_stderr();
  return std::abs((variance ? s.variance : s.mean) - expected) <= kStandardErrors * se;
}

Outcome monte_carlo() {
  Outcome o;
  Rng rng(20261017);
  int checks = 0;
  for (int k = 0; k < kMonteCarloSettings; ++k) {
    SbmParams params;
    params.p = 0.05 + 0.9 * rng.uniform01();
    params.q = params.p * 0.95 * rng.uniform01();
    params.r = 0.05 + 0.9 * rng.uniform01();
    params.s = params.r * rng.uniform01();
    params.n_c = 2 + static_cast<std::int64_t>(rng.uniform_index(19));
    params.n_f = 1 + static_cast<std::int64_t>(rng.uniform_index(40));
    const auto d = static_cast<std::int64_t>(rng.uniform_index(params.n_f + 1));
    const auto m = sbm_moments(params, d);
    const auto e = sbm_simulate_moments(params, d, kMonteCarloSamples, rng.next());
    const std::string tag = "sbm setting " + std::to_string(k) + ": ";
    o.require(within(e.x, m.mean_x, false), tag + "mean_x");
    o.require(within(e.y, m.mean_y, false), tag + "mean_y");
    o.require(within(e.x, m.var_x, true), tag + "var_x");
    o.require(within(e.y, m.var_y, true), tag + "var_y");
    checks += 4;
  }
  for (int k = 0; k < kMonteCarloSettings; ++k) {
    LatticeConfig cfg;
    cfg.c = 3 + static_cast<std::int64_t>(rng.uniform_index(10));
    const std::int64_t a = 2 + static_cast<std::int64_t>(rng.uniform_index(cfg.c - 2));
    const std::int64_t b =
        a + 1 + static_cast<std::int64_t>(rng.uniform_index(2 * cfg.c - 2 * a - 1));
    cfg.v = cfg.u() + a;
    cfg.w = cfg.z() - b;
    const auto d = static_cast<std::int64_t>(rng.uniform_index(20));
    const auto m = lattice_moments(cfg, d);
    const auto e = lattice_sample_moments(cfg, d, kMonteCarloSamples, rng.next());
    const std::string tag = "lattice setting " + std::to_string(k) + ": ";
    o.require(within(e.x, m.mean_x, false), tag + "mean_x");
    o.require(within(e.y, m.mean_y, false), tag + "mean_y");
    o.require(within(e.x, m.var_x, true), tag + "var_x");
    o.require(within(e.y, m.var_y, true), tag + "var_y");
    checks += 4;
  }
  o.detail = o.ok ? std::to_string(checks) + " moments within 3 SE" : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(7);
  std::size_t comparisons = 0;
  for (int trial = 0; trial < kOracleGraphs && o.ok; ++trial) {
    const auto raw = testing::random_raw_graph(rng, kOracleMaxNodes, false);
    const auto g = CoreFringeGraph::build(raw.edges, raw.core);
    const auto train = testing::random_subset(g, rng, 0.8);
    const auto ordering = rng.bernoulli(0.5) ? order_random(g, rng.next())
                                             : order_most_connected(g, train);
    const RankedAdjacency adj(g, train, ordering);
    const auto core = g.core_nodes();
    for (Rank d = 0; d <= adj.num_units(); ++d) {
      const auto h = testing::induce(g, train, ordering, d);
      for (std::size_t i = 0; i < core.size(); ++i) {
        for (std::size_t j = i + 1; j < core.size(); ++j) {
          const auto [inter, uni] = testing::naive_jaccard(h, core[i], core[j]);
          const auto ratio = jaccard_ratio_at(adj, core[i], core[j], d);
          const bool same =
              common_neighbors_at(adj, core[i], core[j], d) ==
                  testing::naive_common_neighbors(h, core[i], core[j]) &&
              ratio.intersection == inter && ratio.union_size == uni;
          o.require(same, "graph " + std::to_string(trial) + ", d = " + std::to_string(d));
          ++comparisons;
        }
      }
    }
  }
  o.detail = o.ok ? std::to_string(comparisons) + " (pair, d) comparisons" : o.detail;
  return o;
}

Outcome pipeline() {
  Outcome o;
  const SbmParams params{0.5, 0.3, 0.2, 0.0, 50, 500};
  double total_gain = 0;
  for (int seed = 0; seed < kPipelineSeeds; ++seed) {
    const auto sample = sbm_sample_graph(params, static_cast<std::uint64_t>(seed));
    ExperimentConfig config;
    config.split = SplitMode::kHoldout;
    config.ordering = OrderingKind::kMostConnected;
    config.score = ScoreKind::kCommonNeighbors;
    config.trials = 10;
    config.seed = static_cast<std::uint64_t>(seed);
    const auto curve = run_experiment(sample.graph, config);
    total_gain += curve.mean.back() - curve.mean.front();
  }
  const double gain = total_gain / kPipelineSeeds;
  o.require(gain >= kPipelineGain, "mean gain " + fmt(gain));
  o.detail = o.ok ? "mean acc(|F|) - acc(0) = " + fmt(gain) : o.detail;
  return o;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_tool(const std::string& tool, const std::string& args, const fs::path& out) {
  const std::string cmd =
      "\"" + tool + "\" " + args + " > \"" + out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_determinism(const std::string& tool) {
  Outcome o;
  if (tool.empty()) {
    o.require(false, "no binary path given");
    return o;
  }
  const fs::path dir =
      fs::temp_directory_path() / ("corefringe_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto q = [&](const char* name) { return "\"" + (dir / name).string() + "\""; };
  const std::string gen = "gen sbm --p 0.5 --q 0.3 --r 0.2 --s 0.1 --nc 10 --nf 60 --seed 3"
                          " --edges-out " + q("g.edges") + " --core-out " + q("g.core");
  const std::vector<std::string> commands = {
      "eval --edges " + q("g.edges") + " --core " + q("g.core") +
          " --split holdout --ordering random --trials 5 --seed 11",
      "eval --edges " + q("g.edges") + " --core " + q("g.core") +
          " --split holdout --score jaccard --trials 5 --seed 11 --threads 3",
      "sbm --p 0.5 --q 0.3 --r 0.2 --s 0.1 --nc 10 --dmax 30 --simulate 500 --seed 4",
      "lattice --c 10 --v -8 --w 1 --simulate 500 --seed 4",
  };
  o.require(run_tool(tool, gen, dir / "gen.out") == 0, "gen failed");
  const std::string first_graph = slurp(dir / "g.edges");
  o.require(run_tool(tool, gen, dir / "gen.out") == 0 && slurp(dir / "g.edges") == first_graph,
            "gen sbm not reproducible");
  for (std::size_t i = 0; i < commands.size() && o.ok; ++i) {
    const auto a = dir / ("a" + std::to_string(i) + ".csv");
    const auto b = dir / ("b" + std::to_string(i) + ".csv");
    o.require(run_tool(tool, commands[i], a) == 0 && run_tool(tool, commands[i], b) == 0,
              "command " + std::to_string(i) + " failed");
    o.require(slurp(a) == slurp(b) && !slurp(a).empty(),
              "command " + std::to_string(i) + " output differs");
  }
  fs::remove_all(dir);
  o.detail = o.ok ? std::to_string(commands.size() + 1) + " commands byte-identical" : o.detail;
  return o;
}

Outcome toy_fixture() {
  Outcome o;
  const auto raw = testing::toy_fixture();
  const auto g = CoreFringeGraph::build(raw.edges, raw.core);
  for (ScoreKind score : {ScoreKind::kCommonNeighbors, ScoreKind::kJaccard}) {
    ExperimentConfig config;
    config.score = score;
    const auto curve = run_experiment(g, config);
    o.require(curve.d == std::vector<std::int64_t>{0, 1, 2}, "unexpected grid");
    o.require(curve.mean == std::vector<double>{0.5, 1.0, 0.5},
              std::string(to_string(score)) + " curve " + fmt(curve.mean[0]) + "," +
                  fmt(curve.mean[1]) + "," + fmt(curve.mean[2]));
  }
  o.detail = o.ok ? "curve (0.5, 1, 0.5) for cn and jaccard" : o.detail;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace corefringe

int main(int argc, char** argv) {
  using namespace corefringe;
  const std::string tool = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "sbm-no-fringe", kFastSeconds, sbm_no_fringe},
      {2, "sbm-all-fringe", kFastSeconds, sbm_all_fringe},
      {3, "sbm-enough-fringe", kFastSeconds, sbm_enough_fringe},
      {4, "lattice-limits", kFastSeconds, lattice_limits},
      {5, "lattice-fig5", kFastSeconds, lattice_fig5},
      {6, "monte-carlo", kMonteCarloSeconds, monte_carlo},
      {7, "oracle-equivalence", kOracleSeconds, oracle_equivalence},
      {8, "sbm-pipeline", kPipelineSeconds, pipeline},
      {9, "cli-determinism", kPipelineSeconds, [&] { return cli_determinism(tool); }},
      {10, "toy-fixture", kFastSeconds, toy_fixture},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.limit_seconds) {
      outcome.ok = false;
      outcome.detail += " (over the " + fmt(c.limit_seconds) + " s limit)";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s %2d %-20s %8.3f s  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name,
                seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
