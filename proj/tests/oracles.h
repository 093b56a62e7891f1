// Copyright 2026 The qmfpr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMFPR_TESTS_ORACLES_H_
#define QMFPR_TESTS_ORACLES_H_

// Brute-force reference computations for the tests. These deliberately use
// different loop structures from the library and never call into it.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

namespace qmfpr::testing {

// out[i] = sum_k p[k] q[i-k], indexed by output position.
inline std::vector<double> ConvolveByOutput(const std::vector<double>& p,
                                            const std::vector<double>& q) {
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k <= i && i - k < q.size()) acc += p[k] * q[i - k];
    }
    out[i] = acc;
  }
  return out;
}

// T_k = sum_{i+j=k} h0_i h1_j ((-1)^j - (-1)^i) / 2, the direct expansion of
// 1/2 [H0(z) H1(-z) - H1(z) H0(-z)].
inline std::vector<double> TransferByExpansion(const std::vector<double>& h0,
                                               const std::vector<double>& h1) {
  std::vector<double> t(h0.size() + h1.size() - 1, 0.0);
  for (std::size_t i = 0; i < h0.size(); ++i) {
    for (std::size_t j = 0; j < h1.size(); ++j) {
      const double sj = (j % 2 == 0) ? 1.0 : -1.0;
      const double si = (i % 2 == 0) ? 1.0 : -1.0;
      t[i + j] += h0[i] * h1[j] * (sj - si) / 2.0;
    }
  }
  return t;
}

// Plain DTFT magnitude.
inline double Magnitude(const std::vector<double>& h, double omega) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    re += h[k] * std::cos(omega * k);
    im -= h[k] * std::sin(omega * k);
  }
  return std::hypot(re, im);
}

inline double SincSquared(double x) {
  if (x == 0.0) return 1.0;
  const double s = std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
  return s * s;
}

inline std::vector<double> RandomVector(std::mt19937& rng, std::size_t len,
                                        double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(len);
  for (double& x : v) x = dist(rng);
  return v;
}

inline std::vector<double> RandomSymmetric(std::mt19937& rng,
                                           std::size_t half_order) {
  std::vector<double> v = RandomVector(rng, 2 * half_order + 1);
  for (std::size_t k = 0; k < half_order; ++k) v[v.size() - 1 - k] = v[k];
  return v;
}

inline double MaxAbsDiff(const std::vector<double>& a,
                         const std::vector<double>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  double m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = k < a.size() ? a[k] : 0.0;
    const double y = k < b.size() ? b[k] : 0.0;
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

}  // namespace qmfpr::testing

#endif  // QMFPR_TESTS_ORACLES_H_
