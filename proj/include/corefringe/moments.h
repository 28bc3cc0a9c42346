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

#ifndef COREFRINGE_MOMENTS_H_
#define COREFRINGE_MOMENTS_H_

#include <cstddef>
#include <span>

namespace corefringe {

// Means and variances of the two common-neighbor counts X (the likelier pair)
// and Y, treated as independent.
struct ProxyMoments {
  double mean_x = 0;
  double mean_y = 0;
  double var_x = 0;
  double var_y = 0;

  double signal() const { return mean_x - mean_y; }
  double variance() const { return var_x + var_y; }
};

// (E[X] - E[Y]) / sqrt(Var X + Var Y). Throws EvaluationError when the
// variance is zero.
double snr(const ProxyMoments& m);

// Lower bound on P(X - Y >= 0) from Cantelli's inequality: snr^2 / (1 + snr^2).
// Throws InvalidArgument for negative input.
double cantelli_bound(double snr);

// Sample statistics of one stream.
struct SampleStats {
  std::size_t n = 0;
  double mean = 0;
  double variance = 0;       // unbiased
  double fourth_central = 0;  // biased central fourth moment

  double mean_stderr() const;
  // Large-sample standard error of `variance`.
  double variance_stderr() const;
};

SampleStats sample_stats(std::span<const double> values);

// Monte Carlo estimates of X, Y and Z = X - Y.
struct EmpiricalMoments {
  SampleStats x;
  SampleStats y;
  SampleStats z;

  // mean(Z) / sd(Z); valid whether or not X and Y are independent.
  double snr() const;
};

EmpiricalMoments empirical_moments(std::span<const double> x,
                                   std::span<const double> y);

}  // namespace corefringe

#endif  // COREFRINGE_MOMENTS_H_
