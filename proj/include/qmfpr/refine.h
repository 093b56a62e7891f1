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

#ifndef QMFPR_REFINE_H_
#define QMFPR_REFINE_H_

#include <vector>

#include "qmfpr/analysis.h"
#include "qmfpr/poly.h"
#include "qmfpr/prototype.h"

namespace qmfpr {

// Order and stop-band zero locations of a refinement.
struct RefinementSpec {
  int m = 1;
  std::vector<double> zero_freqs;

  // Throws std::invalid_argument unless m >= 1 and zero_freqs holds m
  // non-decreasing values in [0, pi). A repeated value is accepted here but
  // makes RefineH1 throw SingularRefinement.
  void Validate() const;
};

// Even-power symmetric polynomial of order 4m-2 built from m free values:
// entries 2j and 4m-2-2j hold e_j, all odd entries are zero.
struct EPoly {
  std::vector<double> free;
  CausalPoly expansion;
};

// Throws std::invalid_argument for an empty `free`.
EPoly BuildE(const std::vector<double>& free);

// m frequencies q * wp / m, q = 0..m-1 (first one is DC).
std::vector<double> DefaultZeroFreqs(int m, const BandEdges& edges);

// z^-2m H1(z) + E(z) H0(z).
CausalPoly ExtendMate(const CausalPoly& h0, const CausalPoly& h1,
                      const EPoly& e);

// e_0 for m == 1: -A_H1(w) / (2 cos(w) A_H0(w)), which is
// -H1(1) / (2 H0(1)) at DC. Throws SingularRefinement if the denominator
// vanishes.
double ClosedFormE0(const SymmetricFir& h0, const SymmetricFir& h1,
                    double omega);

// General path: solves
//   A_shift(w_q) + sum_j e_j A_Gj(w_q) = 0,  q = 0..m-1,
// where A_shift is the amplitude of z^-2m H1 and A_Gj that of
// (z^-2j + z^-(4m-2-2j)) H0, all about the common center n + 2m - 1.
// Throws SingularRefinement on a singular system.
std::vector<double> SolveZeroForcing(const SymmetricFir& h0,
                                     const SymmetricFir& h1,
                                     const std::vector<double>& zero_freqs);

struct RefinementResult {
  EPoly e;
  // Extended mate before passband normalization (same T scale as h1).
  SymmetricFir raw;
  // `raw` scaled to unit gain at pi.
  SymmetricFir h1;
};

// Chooses E so that the extended mate has amplitude zeros at every
// spec.zero_freqs entry: ClosedFormE0 for m == 1, SolveZeroForcing above.
//
// Throws SingularRefinement when the system is singular (including H0(1) == 0
// at m == 1) and DegeneratePassband if the result has no gain at pi.
RefinementResult RefineH1(const SymmetricFir& h0, const SymmetricFir& h1,
                          const RefinementSpec& spec);

// Full pipeline: prototype, basic mate, then refinement when spec.m >= 1
// (zeros from spec.zero_freqs, else DefaultZeroFreqs).
FilterBank DesignBank(const DesignSpec& spec);

}  // namespace qmfpr

#endif  // QMFPR_REFINE_H_
