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

#ifndef QMFPR_QMF_CORE_H_
#define QMFPR_QMF_CORE_H_

#include <cstddef>
#include <vector>

#include "qmfpr/analysis.h"
#include "qmfpr/poly.h"
#include "qmfpr/prototype.h"

namespace qmfpr {

// Square dense system A b = rhs, A stored row-major.
struct DenseSystem {
  std::size_t dim = 0;
  std::vector<double> matrix;
  std::vector<double> rhs;

  double& at(std::size_t row, std::size_t col) {
    return matrix[row * dim + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return matrix[row * dim + col];
  }
};

// Equations for the symmetric high-pass mate of an odd-length symmetric
// low-pass h0 (length 2n+1, n >= 1).
//
// The unknowns are the n independent taps b_0..b_{n-1} of the (2n-1)-tap
// mate H1 (b_{n-1} is its center). Row r constrains the coefficient of
// z^-(2r+1) in P(z) = H0(z) H1(-z),
//   sum_k a_k (-1)^(i-k) b_(i-k),   i = 2r + 1,
// with the mirror b_(2n-2-j) = b_j folded into the columns and taps outside
// H1 dropped. Odd coefficients below the center must vanish; the center
// coefficient i = 2n-1 is pinned to `central_value`.
//
// Throws std::invalid_argument if h0 has fewer than 3 taps or
// central_value is zero.
DenseSystem BuildSystem(const SymmetricFir& h0, double central_value = 1.0);

// Gaussian elimination with partial pivoting. Throws SingularSystem when a
// pivot falls below 1e-12 * max|A|.
std::vector<double> Solve(const DenseSystem& system);

// Expands b_0..b_{n-1} into the symmetric (2n-1)-tap filter.
SymmetricFir UnfoldSymmetric(const std::vector<double>& half);

// Unnormalized mate of h0 (T(z) = z^-(2n-1) exactly).
SymmetricFir SolveMate(const SymmetricFir& h0);

// Scales h1 so that its amplitude at pi is exactly +1. Throws
// DegeneratePassband when |A(pi)| < 1e-9.
SymmetricFir NormalizePassband(const SymmetricFir& h1);

// Basic (pre-refinement) bank for an explicit prototype.
FilterBank DesignPair(const SymmetricFir& h0, const DesignSpec& provenance = {});
// Basic bank for DesignH0(spec); spec.m is ignored.
FilterBank DesignPair(const DesignSpec& spec);

}  // namespace qmfpr

#endif  // QMFPR_QMF_CORE_H_
