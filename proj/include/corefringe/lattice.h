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

// One-dimensional small-world lattice: a node per integer, edge (i, j)
// present independently with probability 1 / |i - j|^alpha. The core is
// {-c, ..., c}; level d exposes {-(c + d), ..., c + d}. The candidate pairs
// are (u, v) and (w, z) with u = -c < v < w < z = c and 2 <= a < b, where
// a = v - u and b = z - w.
//
// For alpha = 1 the common-neighbor counts decompose into independent
// indicators with probabilities 1/(k(k + a)) (outside the pair) and
// 1/(k(a - k)) (between the pair).

#ifndef COREFRINGE_LATTICE_H_
#define COREFRINGE_LATTICE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "corefringe/graph.h"
#include "corefringe/moments.h"
#include "corefringe/ordering.h"

namespace corefringe {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

struct LatticeConfig {
  std::int64_t c = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;
  double alpha = 1.0;

  std::int64_t u() const { return -c; }
  std::int64_t z() const { return c; }
  std::int64_t a() const { return v - u(); }
  std::int64_t b() const { return z() - w; }

  // u < v < w < z and 2 <= a < b.
  void validate() const;
};

// 1 / |j - i|^alpha, capped at 1. Throws InvalidArgument when i == j.
double edge_prob(std::int64_t i, std::int64_t j, double alpha);

// Success probabilities of the independent indicators whose sums are X_d and
// Y_d. alpha must be 1.
struct IndicatorProbabilities {
  std::vector<double> x;
  std::vector<double> y;
};

IndicatorProbabilities lattice_indicator_probs(const LatticeConfig& cfg,
                                               std::int64_t d);

// Exact moments at level d (alpha = 1 only):
//   E[X] = sum_{k=1}^{d} 1/(k(k+a)) + sum_{k=1}^{c+d-v} 1/(k(k+a))
//          + sum_{k=1}^{a-1} 1/(k(a-k))
//   E[Y] = sum_{k=1}^{d} 1/(k(k+b)) + sum_{k=1}^{w+c+d} 1/(k(k+b))
//          + sum_{k=1}^{b-1} 1/(k(b-k))
// and the variances are the matching sums of p(1 - p).
ProxyMoments lattice_moments(const LatticeConfig& cfg, std::int64_t d);

double lattice_snr(const LatticeConfig& cfg, std::int64_t d);
std::vector<double> lattice_snr_curve(const LatticeConfig& cfg, const DGrid& grid);

// psi(n) = -gamma + H_{n-1} for integer n >= 1.
double digamma_int(std::int64_t n);

// lim_{d -> inf} E[X_d] = 2(2 psi(a) + 1/a + 2 gamma) / a for a >= 2.
double limit_expectation(std::int64_t a);

struct LimitSnr {
  double z_star = 0;      // lim E[Z_d]
  double var_star = 0;    // lim Var Z_d
  double s_star = 0;      // z_star / sqrt(var_star)
  double tail_bound = 0;  // bound on the truncated part of var_star
  std::int64_t terms = 0;
};

// Var* = (sum of p) - (sum of p^2) over all indicators. The first sum is
// limit_expectation(a) + limit_expectation(b); the second is summed until its
// tail bound 4 / (3 K^3) drops below tol.
LimitSnr limit_snr(const LatticeConfig& cfg, double tol);

// b(psi(a) + 1/(2a) + gamma) - a(psi(b) + 1/(2b) + gamma); positive exactly
// when the limiting signal is positive. Requires 2 <= a < b.
double positivity_margin(std::int64_t a, std::int64_t b);

// Moments of the increment W between levels, summed over k = d..d+J:
//   E[W] = sum (b - a) / (k(k+a)(k+b)),  Var W = sum p_a(1-p_a) + p_b(1-p_b)
// with p_x = 1/(k(k+x)). Requires d >= 1 and J >= 1.
struct WStatMoments {
  double mean_w = 0;
  double var_w = 0;
};

WStatMoments w_moments(const LatticeConfig& cfg, std::int64_t d, std::int64_t j);

struct OptimalDepth {
  std::int64_t d_star = 0;
  bool is_interior = false;  // 0 < d_star < last grid value
};

// Argmax of `curve` over `grid`, smallest d on ties.
OptimalDepth find_optimal_d(const DGrid& grid, std::span<const double> curve);

// Moment-faithful Monte Carlo: draws the indicators of
// lattice_indicator_probs directly.
EmpiricalMoments lattice_sample_moments(const LatticeConfig& cfg, std::int64_t d,
                                        std::size_t n_samples, std::uint64_t seed);

// Graph on {-(c + d), ..., c + d} with every pair drawn from edge_prob; nodes
// labelled by position, {-c, ..., c} marked core, fringe-fringe pairs not
// drawn. Only cfg.c is used.
CoreFringeGraph lattice_sample_graph(const LatticeConfig& cfg, std::int64_t d,
                                     double alpha, std::uint64_t seed);

// Cov(X_d, Y_d) in a sampled graph (alpha = cfg.alpha): w and z are
// candidates of (u, v) while u and v are candidates of (w, z), and the four
// pairs (A_w, B_u), (A_w, B_v), (A_z, B_u), (A_z, B_v) each share an edge.
// Independent of d.
double lattice_graph_covariance(const LatticeConfig& cfg);

// Graph-faithful Monte Carlo of X_d, Y_d over lattice_sample_graph draws.
EmpiricalMoments lattice_simulate_graph_moments(const LatticeConfig& cfg,
                                                std::int64_t d,
                                                std::size_t n_samples,
                                                std::uint64_t seed);

}  // namespace corefringe

#endif  // COREFRINGE_LATTICE_H_
