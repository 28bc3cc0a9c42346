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

#include "corefringe/sbm.h"

#include <cmath>
#include <string>

#include "corefringe/errors.h"
#include "corefringe/random.h"

namespace corefringe {
namespace {

bool is_probability(double x) { return x >= 0.0 && x <= 1.0; }

void check_depth(const SbmParams& params, std::int64_t d) {
  if (d < 0 || d > params.n_f) {
    throw InvalidArgument("fringe depth " + std::to_string(d) + " outside [0, " +
                          std::to_string(params.n_f) + "]");
  }
}

// Bernoulli(p) variance.
double bv(double p) { return p * (1.0 - p); }

std::int64_t add_bernoullis(Rng& rng, std::int64_t count, double p) {
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < count; ++i) hits += rng.bernoulli(p) ? 1 : 0;
  return hits;
}

}  // namespace

void SbmParams::validate() const {
  if (!is_probability(p) || !is_probability(q) || !is_probability(r) ||
      !is_probability(s)) {
    throw InvalidArgument("SBM probabilities must lie in [0, 1]");
  }
  if (!(q < p)) throw InvalidArgument("SBM requires q < p");
  if (!(s <= r)) throw InvalidArgument("SBM requires s <= r");
  if (n_c < 2) throw InvalidArgument("SBM requires n_c >= 2");
  if (n_f < 0) throw InvalidArgument("SBM requires n_f >= 0");
}

ProxyMoments sbm_moments(const SbmParams& params, std::int64_t d) {
  params.validate();
  check_depth(params, d);
  const double core = 2.0 * static_cast<double>(params.n_c - 1);
  const double dd = static_cast<double>(d);
  const double p2 = params.p * params.p;
  const double pq = params.p * params.q;
  const double r2 = params.r * params.r;
  const double s2 = params.s * params.s;
  const double rs = params.r * params.s;
  return {
      core * p2 + dd * r2 + dd * s2,
      core * pq + 2.0 * dd * rs,
      core * bv(p2) + dd * bv(r2) + dd * bv(s2),
      core * bv(pq) + 2.0 * dd * bv(rs),
  };
}

double sbm_snr(const SbmParams& params, std::int64_t d) {
  return snr(sbm_moments(params, d));
}

std::vector<double> sbm_snr_curve(const SbmParams& params, const DGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.values.size());
  for (auto d : grid.values) out.push_back(sbm_snr(params, d));
  return out;
}

AllFringeCheck check_all_fringe(const SbmParams& params) {
  // Only p and n_c enter the condition, so p = 0 and p = 1 are accepted.
  if (!is_probability(params.p) || params.n_c < 2) {
    throw InvalidArgument("check_all_fringe needs p in [0, 1] and n_c >= 2");
  }
  const double p2 = params.p * params.p;
  AllFringeCheck check;
  check.condition_value = 4.0 * static_cast<double>(params.n_c - 1) * (p2 - p2 * p2);
  check.holds = check.condition_value > 1.0;
  check.in_regime = params.s == 0.0 && params.r > 0.0;
  return check;
}

EnoughFringeDiagnostics enough_fringe_diagnostics(const SbmParams& params) {
  params.validate();
  if (params.r == params.s) {
    throw InvalidArgument("no interior root when r == s: the SNR only decreases");
  }
  const double core = 2.0 * static_cast<double>(params.n_c - 1);
  const double p = params.p;
  const double q = params.q;
  const double r = params.r;
  const double s = params.s;
  EnoughFringeDiagnostics out;
  out.alpha = core * (p * p - p * q);
  out.beta = (r - s) * (r - s);
  out.gamma = core * (bv(p * p) + bv(p * q));
  out.delta = bv(r * r) + bv(s * s) + 2.0 * bv(r * s);
  out.d0 = out.alpha / out.beta - 2.0 * out.gamma / out.delta;
  return out;
}

ProxyMoments sbm_moments_general(const CoreBlocks& core,
                                 std::span<const GeneralFringeBlock> blocks,
                                 std::span<const std::int64_t> depths) {
  if (!is_probability(core.p) || !is_probability(core.q) || !(core.q < core.p) ||
      core.n_c < 2) {
    throw InvalidArgument("invalid core blocks");
  }
  if (blocks.size() != depths.size()) {
    throw InvalidArgument("one depth per fringe block required");
  }
  const double c = 2.0 * static_cast<double>(core.n_c - 1);
  const double p2 = core.p * core.p;
  const double pq = core.p * core.q;
  ProxyMoments m{c * p2, c * pq, c * bv(p2), c * bv(pq)};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    if (!is_probability(block.r_b) || !is_probability(block.s_b) || block.n_b < 0) {
      throw InvalidArgument("invalid fringe block");
    }
    if (depths[b] < 0 || depths[b] > block.n_b) {
      throw InvalidArgument("fringe block depth out of range");
    }
    const double d = static_cast<double>(depths[b]);
    const double r2 = block.r_b * block.r_b;
    const double rs = block.r_b * block.s_b;
    m.mean_x += d * r2;
    m.var_x += d * bv(r2);
    m.mean_y += d * rs;
    m.var_y += d * bv(rs);
  }
  return m;
}

double sbm_snr_general(const CoreBlocks& core,
                       std::span<const GeneralFringeBlock> blocks,
                       std::span<const std::int64_t> depths) {
  return snr(sbm_moments_general(core, blocks, depths));
}

EmpiricalMoments sbm_simulate_moments(const SbmParams& params, std::int64_t d,
                                      std::size_t n_samples, std::uint64_t seed) {
  params.validate();
  check_depth(params, d);
  if (n_samples < 2) throw InvalidArgument("need at least two samples");
  const std::int64_t core = 2 * (params.n_c - 1);
  const double p2 = params.p * params.p;
  const double pq = params.p * params.q;
  const double r2 = params.r * params.r;
  const double s2 = params.s * params.s;
  const double rs = params.r * params.s;
  Rng rng(seed);
  std::vector<double> x(n_samples);
  std::vector<double> y(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    x[i] = static_cast<double>(add_bernoullis(rng, core, p2) +
                               add_bernoullis(rng, d, r2) +
                               add_bernoullis(rng, d, s2));
    y[i] = static_cast<double>(add_bernoullis(rng, core, pq) +
                               add_bernoullis(rng, 2 * d, rs));
  }
  return empirical_moments(x, y);
}

double GraphLevelMoments::snr() const {
  const double v = variance_z();
  if (!(v > 0)) throw EvaluationError("zero variance: SNR undefined");
  return moments.signal() / std::sqrt(v);
}

GraphLevelMoments sbm_graph_moments(const SbmParams& params, std::int64_t d) {
  params.validate();
  check_depth(params, d);
  if (params.n_c < 3) throw InvalidArgument("graph-level moments need n_c >= 3");
  const double nc = static_cast<double>(params.n_c);
  const double dd = static_cast<double>(d);
  const double p = params.p;
  const double q = params.q;
  const double r2 = params.r * params.r;
  const double s2 = params.s * params.s;
  const double rs = params.r * params.s;
  GraphLevelMoments out;
  // Candidates of (u, v): n_c - 2 in block 1 (w included), n_c in block 2
  // (z included). Candidates of (w, z): n_c - 1 in each core block.
  out.moments.mean_x = (nc - 2) * p * p + nc * q * q + dd * r2 + dd * s2;
  out.moments.var_x =
      (nc - 2) * bv(p * p) + nc * bv(q * q) + dd * bv(r2) + dd * bv(s2);
  out.moments.mean_y = 2 * (nc - 1) * p * q + 2 * dd * rs;
  out.moments.var_y = 2 * (nc - 1) * bv(p * q) + 2 * dd * bv(rs);
  // Shared edges: (A_w, B_u) and (A_w, B_v) share u-w / v-w; (A_z, B_u) and
  // (A_z, B_v) share u-z / v-z.
  out.covariance = 2 * p * p * q * (1 - p) + 2 * p * q * q * (1 - q);
  return out;
}

SbmSample sbm_sample_graph(const SbmParams& params, std::uint64_t seed) {
  if (!is_probability(params.p) || !is_probability(params.q) ||
      !is_probability(params.r) || !is_probability(params.s)) {
    throw InvalidArgument("SBM probabilities must lie in [0, 1]");
  }
  if (params.n_c < 2 || params.n_f < 0) {
    throw InvalidArgument("SBM requires n_c >= 2 and n_f >= 0");
  }
  struct Slot {
    int block;
    std::int64_t position;
  };
  std::vector<Slot> slots;
  const std::int64_t sizes[4] = {params.n_c, params.n_c, params.n_f, params.n_f};
  for (int b = 0; b < 4; ++b) {
    for (std::int64_t i = 0; i < sizes[b]; ++i) slots.push_back({b + 1, i});
  }
  const double prob[4][4] = {{params.p, params.q, params.r, params.s},
                             {params.q, params.p, params.s, params.r},
                             {params.r, params.s, 0, 0},
                             {params.s, params.r, 0, 0}};
  auto label = [](const Slot& slot) {
    return "b" + std::to_string(slot.block) + "_" + std::to_string(slot.position);
  };

  std::vector<std::string> core_labels;
  for (const auto& slot : slots) {
    if (slot.block <= 2) core_labels.push_back(label(slot));
  }

  Rng rng(seed);
  std::vector<RawEdge> edges;
  const std::size_t n_core = static_cast<std::size_t>(2 * params.n_c);
  for (std::size_t i = 0; i < n_core; ++i) {
    for (std::size_t j = i + 1; j < slots.size(); ++j) {
      const double pr = prob[slots[i].block - 1][slots[j].block - 1];
      if (rng.bernoulli(pr)) edges.push_back({label(slots[i]), label(slots[j]), {}});
    }
  }

  SbmSample sample{CoreFringeGraph::build(edges, core_labels), {}, {}};
  const auto& g = sample.graph;
  sample.block.resize(g.num_nodes());
  sample.position.resize(g.num_nodes());
  for (NodeIndex x = 0; x < g.num_nodes(); ++x) {
    const std::string& l = g.label(x);
    const auto underscore = l.find('_');
    sample.block[x] = std::stoi(l.substr(1, underscore - 1));
    sample.position[x] = std::stoll(l.substr(underscore + 1));
  }
  return sample;
}

EmpiricalMoments sbm_simulate_graph_moments(const SbmParams& params,
                                            std::int64_t d,
                                            std::size_t n_samples,
                                            std::uint64_t seed) {
  params.validate();
  check_depth(params, d);
  if (params.n_c < 3) throw InvalidArgument("graph-level simulation needs n_c >= 3");
  if (n_samples < 2) throw InvalidArgument("need at least two samples");
  std::vector<double> x(n_samples);
  std::vector<double> y(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const SbmSample sample = sbm_sample_graph(params, derive_seed(seed, i));
    const auto& g = sample.graph;
    auto visible = [&](NodeIndex s) {
      return sample.block[s] <= 2 || sample.position[s] < d;
    };
    auto count = [&](NodeIndex a, NodeIndex b) {
      const auto na = g.neighbors(a);
      const auto nb = g.neighbors(b);
      std::int64_t c = 0;
      auto ia = na.begin();
      auto ib = nb.begin();
      while (ia != na.end() && ib != nb.end()) {
        if (*ia == *ib) {
          c += visible(*ia) ? 1 : 0;
          ++ia;
          ++ib;
        } else if (*ia < *ib) {
          ++ia;
        } else {
          ++ib;
        }
      }
      return static_cast<double>(c);
    };
    const NodeIndex u = g.index_of("b1_0");
    const NodeIndex v = g.index_of("b1_1");
    const NodeIndex w = g.index_of("b1_2");
    const NodeIndex z = g.index_of("b2_0");
    x[i] = count(u, v);
    y[i] = count(w, z);
  }
  return empirical_moments(x, y);
}

}  // namespace corefringe
