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

#include "corefringe/lattice.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "corefringe/errors.h"
#include "corefringe/random.h"

namespace corefringe {
namespace {

double outside_prob(std::int64_t k, std::int64_t gap) {
  const auto kk = static_cast<double>(k);
  return 1.0 / (kk * (kk + static_cast<double>(gap)));
}

double between_prob(std::int64_t k, std::int64_t gap) {
  const auto kk = static_cast<double>(k);
  return 1.0 / (kk * (static_cast<double>(gap) - kk));
}

// H_{n} summed from the small end.
double harmonic(std::int64_t n) {
  double h = 0;
  for (std::int64_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

void require_alpha_one(const LatticeConfig& cfg) {
  if (cfg.alpha != 1.0) {
    throw InvalidArgument("analytic lattice moments cover alpha = 1 only; "
                          "use the graph sampler for other exponents");
  }
}

}  // namespace

void LatticeConfig::validate() const {
  if (c < 1) throw InvalidArgument("lattice core half-width must be >= 1");
  if (!(u() < v && v < w && w < z())) {
    throw InvalidArgument("lattice requires -c < v < w < c");
  }
  if (!(2 <= a() && a() < b())) {
    throw InvalidArgument("lattice requires 2 <= v - u < z - w");
  }
  if (!(alpha >= 0)) throw InvalidArgument("alpha must be non-negative");
}

double edge_prob(std::int64_t i, std::int64_t j, double alpha) {
  if (i == j) throw InvalidArgument("edge_prob needs two distinct positions");
  const auto dist = static_cast<double>(i > j ? i - j : j - i);
  return std::min(1.0, 1.0 / std::pow(dist, alpha));
}

IndicatorProbabilities lattice_indicator_probs(const LatticeConfig& cfg,
                                               std::int64_t d) {
  cfg.validate();
  require_alpha_one(cfg);
  if (d < 0) throw InvalidArgument("fringe depth must be non-negative");
  const std::int64_t a = cfg.a();
  const std::int64_t b = cfg.b();
  IndicatorProbabilities probs;
  // X: left of u (distance k from u), right of v (distance k from v), between.
  for (std::int64_t k = 1; k <= d; ++k) probs.x.push_back(outside_prob(k, a));
  for (std::int64_t k = 1; k <= cfg.c + d - cfg.v; ++k) {
    probs.x.push_back(outside_prob(k, a));
  }
  for (std::int64_t k = 1; k <= a - 1; ++k) probs.x.push_back(between_prob(k, a));
  // Y: right of z, left of w (k = w - s runs 1..w + c + d), between.
  for (std::int64_t k = 1; k <= d; ++k) probs.y.push_back(outside_prob(k, b));
  for (std::int64_t k = 1; k <= cfg.w + cfg.c + d; ++k) {
    probs.y.push_back(outside_prob(k, b));
  }
  for (std::int64_t k = 1; k <= b - 1; ++k) probs.y.push_back(between_prob(k, b));
  return probs;
}

ProxyMoments lattice_moments(const LatticeConfig& cfg, std::int64_t d) {
  const auto probs = lattice_indicator_probs(cfg, d);
  ProxyMoments m;
  for (double p : probs.x) {
    m.mean_x += p;
    m.var_x += p * (1.0 - p);
  }
  for (double p : probs.y) {
    m.mean_y += p;
    m.var_y += p * (1.0 - p);
  }
  return m;
}

double lattice_snr(const LatticeConfig& cfg, std::int64_t d) {
  return snr(lattice_moments(cfg, d));
}

std::vector<double> lattice_snr_curve(const LatticeConfig& cfg, const DGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.values.size());
  for (auto d : grid.values) out.push_back(lattice_snr(cfg, d));
  return out;
}

double digamma_int(std::int64_t n) {
  if (n < 1) throw InvalidArgument("digamma_int needs n >= 1");
  return -kEulerGamma + harmonic(n - 1);
}

double limit_expectation(std::int64_t a) {
  if (a < 2) throw InvalidArgument("limit_expectation needs a >= 2");
  const auto aa = static_cast<double>(a);
  return 2.0 * (2.0 * digamma_int(a) + 1.0 / aa + 2.0 * kEulerGamma) / aa;
}

LimitSnr limit_snr(const LatticeConfig& cfg, double tol) {
  cfg.validate();
  require_alpha_one(cfg);
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const std::int64_t a = cfg.a();
  const std::int64_t b = cfg.b();

  constexpr std::int64_t kMaxTerms = 10'000'000;
  auto k_max = static_cast<std::int64_t>(std::ceil(std::cbrt(4.0 / (3.0 * tol))));
  k_max = std::clamp<std::int64_t>(k_max, 1, kMaxTerms);

  // Sum p^2 over every indicator; small terms first.
  double squares = 0;
  for (std::int64_t k = k_max; k >= 1; --k) {
    const double pa = outside_prob(k, a);
    const double pb = outside_prob(k, b);
    squares += 2.0 * (pa * pa + pb * pb);
  }
  for (std::int64_t k = 1; k < a; ++k) squares += std::pow(between_prob(k, a), 2);
  for (std::int64_t k = 1; k < b; ++k) squares += std::pow(between_prob(k, b), 2);

  LimitSnr out;
  out.terms = k_max;
  out.tail_bound = 4.0 / (3.0 * std::pow(static_cast<double>(k_max), 3));
  out.z_star = limit_expectation(a) - limit_expectation(b);
  out.var_star = limit_expectation(a) + limit_expectation(b) - squares;
  out.s_star = out.z_star / std::sqrt(out.var_star);
  return out;
}

double positivity_margin(std::int64_t a, std::int64_t b) {
  if (!(2 <= a && a < b)) throw InvalidArgument("positivity_margin needs 2 <= a < b");
  const auto aa = static_cast<double>(a);
  const auto bb = static_cast<double>(b);
  // psi(n) + gamma = H_{n-1}.
  return bb * (harmonic(a - 1) + 1.0 / (2.0 * aa)) -
         aa * (harmonic(b - 1) + 1.0 / (2.0 * bb));
}

WStatMoments w_moments(const LatticeConfig& cfg, std::int64_t d, std::int64_t j) {
  cfg.validate();
  if (d < 1 || j < 1) throw InvalidArgument("w_moments needs d >= 1 and J >= 1");
  const auto a = static_cast<double>(cfg.a());
  const auto b = static_cast<double>(cfg.b());
  WStatMoments m;
  for (std::int64_t k = d; k <= d + j; ++k) {
    const auto kk = static_cast<double>(k);
    m.mean_w += (b - a) / (kk * (kk + a) * (kk + b));
    const double pa = outside_prob(k, cfg.a());
    const double pb = outside_prob(k, cfg.b());
    m.var_w += pa * (1.0 - pa) + pb * (1.0 - pb);
  }
  return m;
}

OptimalDepth find_optimal_d(const DGrid& grid, std::span<const double> curve) {
  if (curve.empty() || curve.size() != grid.values.size()) {
    throw InvalidArgument("curve must be non-empty and match the grid");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i] > curve[best]) best = i;
  }
  OptimalDepth out;
  out.d_star = grid.values[best];
  out.is_interior = out.d_star > 0 && out.d_star < grid.values.back();
  return out;
}

EmpiricalMoments lattice_sample_moments(const LatticeConfig& cfg, std::int64_t d,
                                        std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 2) throw InvalidArgument("need at least two samples");
  const auto probs = lattice_indicator_probs(cfg, d);
  Rng rng(seed);
  std::vector<double> x(n_samples);
  std::vector<double> y(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    int cx = 0;
    int cy = 0;
    for (double p : probs.x) cx += rng.bernoulli(p) ? 1 : 0;
    for (double p : probs.y) cy += rng.bernoulli(p) ? 1 : 0;
    x[i] = cx;
    y[i] = cy;
  }
  return empirical_moments(x, y);
}

CoreFringeGraph lattice_sample_graph(const LatticeConfig& cfg, std::int64_t d,
                                     double alpha, std::uint64_t seed) {
  if (cfg.c < 1) throw InvalidArgument("lattice core half-width must be >= 1");
  if (d < 0) throw InvalidArgument("fringe depth must be non-negative");
  if (!(alpha >= 0)) throw InvalidArgument("alpha must be non-negative");
  const std::int64_t lo = -(cfg.c + d);
  const std::int64_t hi = cfg.c + d;
  auto is_core = [&](std::int64_t i) { return i >= -cfg.c && i <= cfg.c; };

  std::vector<std::string> core_labels;
  for (std::int64_t i = -cfg.c; i <= cfg.c; ++i) core_labels.push_back(std::to_string(i));

  Rng rng(seed);
  std::vector<RawEdge> edges;
  for (std::int64_t i = lo; i <= hi; ++i) {
    for (std::int64_t j = i + 1; j <= hi; ++j) {
      if (!is_core(i) && !is_core(j)) continue;
      if (rng.bernoulli(edge_prob(i, j, alpha))) {
        edges.push_back({std::to_string(i), std::to_string(j), {}});
      }
    }
  }
  return CoreFringeGraph::build(edges, core_labels);
}

double lattice_graph_covariance(const LatticeConfig& cfg) {
  cfg.validate();
  auto pr = [&](std::int64_t i, std::int64_t j) { return edge_prob(i, j, cfg.alpha); };
  const std::int64_t u = cfg.u();
  const std::int64_t v = cfg.v;
  const std::int64_t w = cfg.w;
  const std::int64_t z = cfg.z();
  return pr(u, w) * pr(v, w) * pr(z, u) * (1.0 - pr(u, w)) +  // A_w, B_u
         pr(u, w) * pr(v, w) * pr(z, v) * (1.0 - pr(v, w)) +  // A_w, B_v
         pr(u, z) * pr(v, z) * pr(w, u) * (1.0 - pr(u, z)) +  // A_z, B_u
         pr(u, z) * pr(v, z) * pr(w, v) * (1.0 - pr(v, z));   // A_z, B_v
}

EmpiricalMoments lattice_simulate_graph_moments(const LatticeConfig& cfg,
                                                std::int64_t d,
                                                std::size_t n_samples,
                                                std::uint64_t seed) {
  cfg.validate();
  if (n_samples < 2) throw InvalidArgument("need at least two samples");
  std::vector<double> x(n_samples);
  std::vector<double> y(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto g = lattice_sample_graph(cfg, d, cfg.alpha, derive_seed(seed, i));
    auto count = [&](std::int64_t a, std::int64_t b) {
      const auto na = g.neighbors(g.index_of(std::to_string(a)));
      const auto nb = g.neighbors(g.index_of(std::to_string(b)));
      std::vector<NodeIndex> common;
      std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                            std::back_inserter(common));
      return static_cast<double>(common.size());
    };
    x[i] = count(cfg.u(), cfg.v);
    y[i] = count(cfg.w, cfg.z());
  }
  return empirical_moments(x, y);
}

}  // namespace corefringe
