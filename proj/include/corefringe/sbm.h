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

// Core-fringe stochastic block model with four blocks. Blocks 1 and 2 form the
// core (n_c nodes each), blocks 3 and 4 the fringe (n_f nodes each):
//
//        | p  q  r  s |
//    P = | q  p  s  r |
//        | r  s  0  0 |
//        | s  r  0  0 |
//
// The candidate pairs are (u, v) with u, v in block 1 and (w, z) with w in
// block 1 and z in block 2. X_d and Y_d count their common neighbors when the
// first d nodes of *each* fringe block are visible.

#ifndef COREFRINGE_SBM_H_
#define COREFRINGE_SBM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "corefringe/graph.h"
#include "corefringe/moments.h"
#include "corefringe/ordering.h"

namespace corefringe {

struct SbmParams {
  double p = 0;
  double q = 0;
  double r = 0;
  double s = 0;
  std::int64_t n_c = 2;
  std::int64_t n_f = 0;

  // Probabilities in [0, 1], q < p, s <= r, n_c >= 2, n_f >= 0.
  void validate() const;
};

// Closed-form moments, requires 0 <= d <= n_f:
//   E[X] = 2(n_c-1)p^2 + d r^2 + d s^2         E[Y] = 2(n_c-1)pq + 2drs
//   Var X = 2(n_c-1)p^2(1-p^2) + d r^2(1-r^2) + d s^2(1-s^2)
//   Var Y = 2(n_c-1)pq(1-pq) + 2drs(1-rs)
ProxyMoments sbm_moments(const SbmParams& params, std::int64_t d);

double sbm_snr(const SbmParams& params, std::int64_t d);
std::vector<double> sbm_snr_curve(const SbmParams& params, const DGrid& grid);

// Sufficient condition for the SNR to grow without bound in d when s = 0.
struct AllFringeCheck {
  double condition_value = 0;  // 4(n_c-1)(p^2 - p^4)
  bool holds = false;          // condition_value > 1
  bool in_regime = false;      // s == 0 and r > 0
};

AllFringeCheck check_all_fringe(const SbmParams& params);

// SNR(d) = (alpha + beta d) / sqrt(gamma + delta d); its derivative in d has
// the single root d0 = alpha/beta - 2 gamma/delta.
struct EnoughFringeDiagnostics {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  double delta = 0;
  double d0 = 0;
};

// Throws InvalidArgument when r == s (beta = 0, no interior root).
EnoughFringeDiagnostics enough_fringe_diagnostics(const SbmParams& params);

// Core part of the model with any number of extra fringe blocks.
struct CoreBlocks {
  double p = 0;
  double q = 0;
  std::int64_t n_c = 2;
};

// A fringe block linking to core block 1 with probability r_b and to core
// block 2 with probability s_b.
struct GeneralFringeBlock {
  double r_b = 0;
  double s_b = 0;
  std::int64_t n_b = 0;
};

// Depth d_b of block b adds d_b r_b^2 to E[X] and d_b r_b s_b to E[Y]
// (variances likewise). With blocks {(r, s), (s, r)} at equal depth d this is
// sbm_moments(params, d).
ProxyMoments sbm_moments_general(const CoreBlocks& core,
                                 std::span<const GeneralFringeBlock> blocks,
                                 std::span<const std::int64_t> depths);
double sbm_snr_general(const CoreBlocks& core,
                       std::span<const GeneralFringeBlock> blocks,
                       std::span<const std::int64_t> depths);

// Moment-faithful Monte Carlo: X and Y drawn as the independent Bernoulli sums
// behind sbm_moments.
EmpiricalMoments sbm_simulate_moments(const SbmParams& params, std::int64_t d,
                                      std::size_t n_samples, std::uint64_t seed);

// Exact moments of the common-neighbor counts in a sampled graph with fixed
// u, v, w in block 1 and z in block 2 (requires n_c >= 3). Unlike
// sbm_moments, block-2 candidates of (u, v) contribute q^2, and X and Y are
// correlated through the edges u-w, v-w, u-z and v-z.
struct GraphLevelMoments {
  ProxyMoments moments;
  double covariance = 0;  // Cov(X, Y)

  double variance_z() const {
    return moments.var_x + moments.var_y - 2.0 * covariance;
  }
  double snr() const;
};

GraphLevelMoments sbm_graph_moments(const SbmParams& params, std::int64_t d);

struct SbmSample {
  CoreFringeGraph graph;
  // Per graph node: block 1..4 and position inside the block.
  std::vector<int> block;
  std::vector<std::int64_t> position;
};

// Draws every core-core and core-fringe pair independently with its block
// probability. Only needs probabilities in [0, 1], n_c >= 2 and n_f >= 0. Labels are "b<block>_<position>". Fringe nodes that draw no
// link are unobservable and are absent from the graph.
SbmSample sbm_sample_graph(const SbmParams& params, std::uint64_t seed);

// Graph-faithful Monte Carlo of X_d, Y_d over sbm_sample_graph draws, with
// u, v, w = positions 0, 1, 2 of block 1 and z = position 0 of block 2.
EmpiricalMoments sbm_simulate_graph_moments(const SbmParams& params,
                                            std::int64_t d,
                                            std::size_t n_samples,
                                            std::uint64_t seed);

}  // namespace corefringe

#endif  // COREFRINGE_SBM_H_
