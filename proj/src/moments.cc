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

#include "corefringe/moments.h"

#include <cmath>
#include <vector>

#include "corefringe/errors.h"

namespace corefringe {

double snr(const ProxyMoments& m) {
  const double v = m.variance();
  if (!(v > 0)) throw EvaluationError("zero variance: SNR undefined");
  return m.signal() / std::sqrt(v);
}

double cantelli_bound(double snr) {
  if (snr < 0 || std::isnan(snr)) throw InvalidArgument("snr must be non-negative");
  const double s2 = snr * snr;
  return s2 / (1.0 + s2);
}

double SampleStats::mean_stderr() const {
  return n > 0 ? std::sqrt(variance / static_cast<double>(n)) : 0.0;
}

double SampleStats::variance_stderr() const {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  // Var(s^2) ~ (mu4 - sigma^4 (n - 3) / (n - 1)) / n.
  const double v = (fourth_central - variance * variance * (nn - 3) / (nn - 1)) / nn;
  return v > 0 ? std::sqrt(v) : 0.0;
}

SampleStats sample_stats(std::span<const double> values) {
  SampleStats s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  double m2 = 0;
  double m4 = 0;
  for (double v : values) {
    const double dev = v - s.mean;
    const double sq = dev * dev;
    m2 += sq;
    m4 += sq * sq;
  }
  s.variance = s.n > 1 ? m2 / static_cast<double>(s.n - 1) : 0.0;
  s.fourth_central = m4 / static_cast<double>(s.n);
  return s;
}

double EmpiricalMoments::snr() const {
  if (!(z.variance > 0)) throw EvaluationError("zero empirical variance");
  return z.mean / std::sqrt(z.variance);
}

EmpiricalMoments empirical_moments(std::span<const double> x,
                                   std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("sample streams differ in length");
  std::vector<double> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return {sample_stats(x), sample_stats(y), sample_stats(z)};
}

}  // namespace corefringe
