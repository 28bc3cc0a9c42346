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


#include "corefringe/cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "corefringe/errors.h"
#include "corefringe/evaluation.h"
#include "corefringe/graph.h"
#include "corefringe/io.h"
#include "corefringe/lattice.h"
#include "corefringe/random.h"
#include "corefringe/sbm.h"
#include "corefringe/table.h"

namespace corefringe {
namespace {

struct OutputOptions {
  std::string path;
  std::string format = "csv";
};

struct EvalOptions {
  std::string edges;
  std::string core;
  std::string groups;
  std::string meta;
  std::string core_group;
  std::string score = "cn";
  std::string ordering = "most-connected";
  std::string split = "temporal";
  std::string grid = "auto";
  double test_fraction = 0.2;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t tuples_per_test = 10;
  unsigned threads = 0;
  OutputOptions output;
};

struct SbmOptions {
  SbmParams params;
  std::int64_t n_f = -1;
  std::int64_t dmax = 500;
  std::string grid = "full";
  bool bound = false;
  std::size_t simulate = 0;
  std::uint64_t seed = 0;
  OutputOptions output;
};

struct LatticeOptions {
  LatticeConfig cfg;
  std::int64_t dmax = 12;
  std::size_t simulate = 0;
  std::uint64_t seed = 0;
  OutputOptions output;
};

struct GenOptions {
  SbmParams sbm;
  LatticeConfig lattice;
  std::int64_t depth = 0;
  std::uint64_t seed = 0;
  std::string edges_out;
  std::string core_out;
};

const std::map<std::string, ScoreKind> kScores = {
    {"cn", ScoreKind::kCommonNeighbors}, {"jaccard", ScoreKind::kJaccard}};
const std::map<std::string, OrderingKind> kOrderings = {
    {"most-connected", OrderingKind::kMostConnected},
    {"random", OrderingKind::kRandom},
    {"most-users", OrderingKind::kMostUsers},
    {"proximity", OrderingKind::kProximity}};
const std::map<std::string, SplitMode> kSplits = {{"temporal", SplitMode::kTemporal},
                                                  {"holdout", SplitMode::kHoldout}};

template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("-o,--output", o.path, "Output file (default: standard output)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

std::ofstream open_for_writing(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, 0, "cannot open for writing");
  return file;
}

void emit(const Table& table, const OutputOptions& o, std::ostream& out) {
  const OutputFormat format = o.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  std::ostringstream buffer;
  write_table(buffer, table, format);
  if (o.path.empty()) {
    out << buffer.str();
    out.flush();
    return;
  }
  auto file = open_for_writing(o.path);
  file << buffer.str();
  if (!file.flush()) throw ParseError(o.path, 0, "write failed");
}

void cmd_eval(const EvalOptions& o, std::ostream& out) {
  ExperimentConfig config;
  config.score = kScores.at(o.score);
  config.ordering = kOrderings.at(o.ordering);
  config.split = kSplits.at(o.split);
  config.test_fraction = o.test_fraction;
  config.trials = o.trials;
  config.seed = o.seed;
  config.tuples_per_test_edge = o.tuples_per_test;
  config.threads = o.threads;

  const bool group_ordering = config.ordering == OrderingKind::kMostUsers ||
                              config.ordering == OrderingKind::kProximity;
  if (group_ordering && o.groups.empty()) {
    throw InvalidArgument("--ordering " + o.ordering + " requires --groups");
  }
  if (config.ordering == OrderingKind::kProximity && o.meta.empty()) {
    throw InvalidArgument("--ordering proximity requires --meta");
  }
  if (!o.meta.empty() && o.groups.empty()) {
    throw InvalidArgument("--meta requires --groups");
  }
  if (!o.groups.empty() && o.core_group.empty()) {
    throw InvalidArgument("--groups requires --core-group");
  }
  const bool group_level = !o.groups.empty();
  if (o.grid == "auto") {
    config.grid = group_level ? GridMode::kFull : GridMode::kGeometric;
  } else {
    config.grid = o.grid == "full" ? GridMode::kFull : GridMode::kGeometric;
  }

  const auto edges = load_edges(o.edges);
  const auto core = load_core(o.core);
  std::optional<GroupTable> groups;
  if (group_level) {
    std::optional<std::filesystem::path> meta;
    if (!o.meta.empty()) meta = o.meta;
    groups = load_groups(o.groups, meta);
    config.groups = &*groups;
    config.core_group = o.core_group;
  }

  const auto g = CoreFringeGraph::build(edges, core);
  if (config.split == SplitMode::kTemporal && !g.timed()) {
    throw InvalidArgument("--split temporal requires timestamped edges");
  }
  const auto curve = run_experiment(g, config);
  emit(curve_table(curve, config.ordering, config.score, config.split), o.output, out);
}

void cmd_sbm(SbmOptions o, std::ostream& out) {
  if (o.dmax < 0) throw InvalidArgument("--dmax must be non-negative");
  o.params.n_f = o.n_f < 0 ? o.dmax : o.n_f;
  if (o.params.n_f < o.dmax) throw InvalidArgument("--nf must be at least --dmax");
  o.params.validate();
  const DGrid grid =
      make_dgrid(o.dmax, o.grid == "geometric" ? GridMode::kGeometric : GridMode::kFull);

  Table table;
  table.columns = {"d", "snr"};
  if (o.bound) table.columns.push_back("cantelli_bound");
  if (o.simulate > 0) table.columns.push_back("empirical_snr");
  for (auto d : grid.values) {
    const double value = sbm_snr(o.params, d);
    std::vector<Cell> row = {d, value};
    if (o.bound) row.push_back(cantelli_bound(std::max(value, 0.0)));
    if (o.simulate > 0) {
      row.push_back(
          sbm_simulate_moments(o.params, d, o.simulate, derive_seed(o.seed, d)).snr());
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, o.output, out);
}

void cmd_lattice(const LatticeOptions& o, std::ostream& out) {
  if (o.dmax < 0) throw InvalidArgument("--dmax must be non-negative");
  o.cfg.validate();
  const DGrid grid = make_dgrid(o.dmax, GridMode::kFull);

  Table table;
  table.columns = {"d", "snr"};
  if (o.simulate > 0) table.columns.push_back("empirical_snr");
  for (auto d : grid.values) {
    std::vector<Cell> row = {d, lattice_snr(o.cfg, d)};
    if (o.simulate > 0) {
      row.push_back(
          lattice_sample_moments(o.cfg, d, o.simulate, derive_seed(o.seed, d)).snr());
    }
    table.rows.push_back(std::move(row));
  }
  emit(table, o.output, out);
}

void write_graph(const CoreFringeGraph& g, const GenOptions& o) {
  auto edges = open_for_writing(o.edges_out);
  write_edges(edges, g);
  if (!edges.flush()) throw ParseError(o.edges_out, 0, "write failed");
  auto core = open_for_writing(o.core_out);
  write_core(core, g);
  if (!core.flush()) throw ParseError(o.core_out, 0, "write failed");
}

void add_gen_files(CLI::App* cmd, GenOptions& o) {
  cmd->add_option("--edges-out", o.edges_out, "Edge list to write")->required();
  cmd->add_option("--core-out", o.core_out, "Core list to write")->required();
  cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core-fringe link prediction evaluation and model analysis", "corefringe"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Accuracy as a function of fringe depth d");
  eval_cmd->add_option("--edges", eval.edges, "Edge list: u v [timestamp] per line")
      ->required();
  eval_cmd->add_option("--core", eval.core, "Core labels, one per line")->required();
  eval_cmd->add_option("--groups", eval.groups, "Group membership: node group per line");
  eval_cmd->add_option("--meta", eval.meta, "Group coordinates: group lat lon per line");
  eval_cmd->add_option("--core-group", eval.core_group, "Group holding the core");
  eval_cmd->add_option("--score", eval.score, "Score function")
      ->check(CLI::IsMember(keys(kScores)))
      ->capture_default_str();
  eval_cmd->add_option("--ordering", eval.ordering, "Fringe ordering")
      ->check(CLI::IsMember(keys(kOrderings)))
      ->capture_default_str();
  eval_cmd->add_option("--split", eval.split, "Train/test split")
      ->check(CLI::IsMember(keys(kSplits)))
      ->capture_default_str();
  eval_cmd->add_option("--test-fraction", eval.test_fraction, "Test fraction f")
      ->capture_default_str();
  eval_cmd->add_option("--trials", eval.trials, "Number of trials")->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed, "Random seed")->capture_default_str();
  eval_cmd
      ->add_option("--grid", eval.grid,
                   "d grid; auto is geometric for node orderings, full for groups")
      ->check(CLI::IsMember({"auto", "full", "geometric"}))
      ->capture_default_str();
  eval_cmd->add_option("--tuples-per-test", eval.tuples_per_test,
                       "Evaluation tuples per test edge")
      ->capture_default_str();
  eval_cmd->add_option("--threads", eval.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  add_output_options(eval_cmd, eval.output);

  SbmOptions sbm;
  auto* sbm_cmd = app.add_subcommand("sbm", "SNR curve of the core-fringe block model");
  sbm_cmd->add_option("--p", sbm.params.p, "Within-core-block probability")->required();
  sbm_cmd->add_option("--q", sbm.params.q, "Between-core-block probability")->required();
  sbm_cmd->add_option("--r", sbm.params.r, "Fringe link to matching core block")->required();
  sbm_cmd->add_option("--s", sbm.params.s, "Fringe link to other core block")->required();
  sbm_cmd->add_option("--nc", sbm.params.n_c, "Nodes per core block")->required();
  sbm_cmd->add_option("--nf", sbm.n_f, "Nodes per fringe block (default: --dmax)");
  sbm_cmd->add_option("--dmax", sbm.dmax, "Largest d")->capture_default_str();
  sbm_cmd->add_option("--grid", sbm.grid, "d grid")
      ->check(CLI::IsMember({"full", "geometric"}))
      ->capture_default_str();
  sbm_cmd->add_flag("--bound", sbm.bound, "Add the Cantelli lower bound column");
  sbm_cmd->add_option("--simulate", sbm.simulate,
                      "Monte Carlo samples per d for an empirical SNR column");
  sbm_cmd->add_option("--seed", sbm.seed, "Random seed")->capture_default_str();
  add_output_options(sbm_cmd, sbm.output);

  LatticeOptions lattice;
  auto* lattice_cmd = app.add_subcommand("lattice", "SNR curve of the small-world lattice");
  lattice_cmd->add_option("--c", lattice.cfg.c, "Core half-width")->required();
  lattice_cmd->add_option("--v", lattice.cfg.v, "Position of v")->required();
  lattice_cmd->add_option("--w", lattice.cfg.w, "Position of w")->required();
  lattice_cmd->add_option("--dmax", lattice.dmax, "Largest d")->capture_default_str();
  lattice_cmd->add_option("--simulate", lattice.simulate,
                          "Monte Carlo samples per d for an empirical SNR column");
  lattice_cmd->add_option("--seed", lattice.seed, "Random seed")->capture_default_str();
  add_output_options(lattice_cmd, lattice.output);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a sampled model graph");
  gen_cmd->require_subcommand(1);
  auto* gen_sbm = gen_cmd->add_subcommand("sbm", "Core-fringe block model graph");
  gen_sbm->add_option("--p", gen.sbm.p, "Within-core-block probability")->required();
  gen_sbm->add_option("--q", gen.sbm.q, "Between-core-block probability")->required();
  gen_sbm->add_option("--r", gen.sbm.r, "Fringe link to matching core block")->required();
  gen_sbm->add_option("--s", gen.sbm.s, "Fringe link to other core block")->required();
  gen_sbm->add_option("--nc", gen.sbm.n_c, "Nodes per core block")->required();
  gen_sbm->add_option("--nf", gen.sbm.n_f, "Nodes per fringe block")->required();
  add_gen_files(gen_sbm, gen);
  auto* gen_lattice = gen_cmd->add_subcommand("lattice", "Small-world lattice graph");
  gen_lattice->add_option("--c", gen.lattice.c, "Core half-width")->required();
  gen_lattice->add_option("--d", gen.depth, "Fringe depth on each side")
      ->capture_default_str();
  gen_lattice->add_option("--alpha", gen.lattice.alpha, "Distance exponent")
      ->capture_default_str();
  add_gen_files(gen_lattice, gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*eval_cmd) {
      cmd_eval(eval, out);
    } else if (*sbm_cmd) {
      cmd_sbm(sbm, out);
    } else if (*lattice_cmd) {
      cmd_lattice(lattice, out);
    } else if (*gen_sbm) {
      write_graph(sbm_sample_graph(gen.sbm, gen.seed).graph, gen);
    } else if (*gen_lattice) {
      write_graph(lattice_sample_graph(gen.lattice, gen.depth, gen.lattice.alpha, gen.seed),
                  gen);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
  return kExitOk;
}

}  // namespace corefringe
