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

#include "qmfpr/qmf_core.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmfpr/errors.h"

namespace qmfpr {
namespace {

constexpr double kPivotTolerance = 1e-12;
constexpr double kMinPassbandGain = 1e-9;

}  // namespace

DenseSystem BuildSystem(const SymmetricFir& h0, double central_value) {
  if (h0.size() < 3) {
    throw std::invalid_argument(
        "BuildSystem: prototype needs at least 3 taps, got " +
        std::to_string(h0.size()));
  }
  if (central_value == 0.0) {
    throw std::invalid_argument("BuildSystem: central value must be nonzero");
  }
  const std::size_t n = h0.center();
  const std::size_t mate_len = 2 * n - 1;

  DenseSystem sys;
  sys.dim = n;
  sys.matrix.assign(n * n, 0.0);
  sys.rhs.assign(n, 0.0);
  sys.rhs[n - 1] = central_value;

  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t i = 2 * row + 1;
    for (std::size_t k = 0; k <= std::min(i, h0.size() - 1); ++k) {
      const std::size_t j = i - k;
      if (j >= mate_len) continue;
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const std::size_t col = std::min(j, mate_len - 1 - j);
      sys.at(row, col) += sign * h0[k];
    }
  }
  return sys;
}

std::vector<double> Solve(const DenseSystem& system) {
  const std::size_t n = system.dim;
  if (system.matrix.size() != n * n || system.rhs.size() != n || n == 0) {
    throw std::invalid_argument("Solve: system is not square");
  }
  DenseSystem work = system;

  double scale = 0.0;
  for (double v : work.matrix) scale = std::max(scale, std::abs(v));
  const double min_pivot = kPivotTolerance * scale;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
    }
    if (!(std::abs(work.at(pivot, col)) >= min_pivot) || scale == 0.0) {
      throw SingularSystem("zero pivot in column " + std::to_string(col) +
                           " of " + std::to_string(n) + "x" +
                           std::to_string(n) + " system");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
      }
      std::swap(work.rhs[pivot], work.rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = work.at(r, col) / work.at(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) work.at(r, c) -= f * work.at(col, c);
      work.rhs[r] -= f * work.rhs[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t r = n; r-- > 0;) {
    double acc = work.rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= work.at(r, c) * x[c];
    x[r] = acc / work.at(r, r);
  }
  return x;
}

SymmetricFir UnfoldSymmetric(const std::vector<double>& half) {
  if (half.empty()) {
    throw std::invalid_argument("UnfoldSymmetric: no coefficients");
  }
  const std::size_t len = 2 * half.size() - 1;
  std::vector<double> full(len);
  for (std::size_t j = 0; j < len; ++j) full[j] = half[std::min(j, len - 1 - j)];
  return SymmetricFir(CausalPoly(std::move(full)));
}

SymmetricFir SolveMate(const SymmetricFir& h0) {
  return UnfoldSymmetric(Solve(BuildSystem(h0)));
}

SymmetricFir NormalizePassband(const SymmetricFir& h1) {
  const double gain = Amplitude(h1, std::numbers::pi);
  if (std::abs(gain) < kMinPassbandGain) {
    throw DegeneratePassband("high-pass mate has amplitude " +
                             std::to_string(gain) + " at pi");
  }
  return SymmetricFir(Scale(h1.poly(), 1.0 / gain));
}

FilterBank DesignPair(const SymmetricFir& h0, const DesignSpec& provenance) {
  SymmetricFir h1 = NormalizePassband(SolveMate(h0));
  return MakeFilterBank(h0, std::move(h1), provenance);
}

FilterBank DesignPair(const DesignSpec& spec) {
  return DesignPair(DesignH0(spec), spec);
}

}  // namespace qmfpr
