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

#ifndef QMFPR_ANALYSIS_H_
#define QMFPR_ANALYSIS_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmfpr/poly.h"
#include "qmfpr/prototype.h"

namespace qmfpr {

inline constexpr double kDefaultPrTolerance = 1e-9;

// Result of matching T(z) against c * z^(-d).
struct PrReport {
  int delay = 0;
  double scale = 0.0;
  // max |T_k| / |c| over k != d.
  double max_spurious = 0.0;
  bool pass = false;
};

// Two-channel bank: analysis (h0, h1) and synthesis f0 = H1(-z),
// f1 = -H0(-z), with the certified T(z) = scale * z^(-delay).
struct FilterBank {
  SymmetricFir h0;
  SymmetricFir h1;
  CausalPoly f0;
  CausalPoly f1;
  int delay = 0;
  double scale = 0.0;
  double max_spurious = 0.0;
  DesignSpec provenance;
  std::vector<double> zero_freqs;
};

// T(z) = 1/2 [H0(z) H1(-z) - H1(z) H0(-z)].
CausalPoly Transfer(const CausalPoly& h0, const CausalPoly& h1);

// Locates the dominant term of T(z). Throws NoDelayFound when every
// coefficient of T is at most 1e-9 in magnitude.
PrReport VerifyPr(const CausalPoly& h0, const CausalPoly& h1,
                  double tol = kDefaultPrTolerance);

// {H1(-z), -H0(-z)}.
std::pair<CausalPoly, CausalPoly> SynthesisFilters(const CausalPoly& h0,
                                                   const CausalPoly& h1);

// H0(-z) F0(z) + H1(-z) F1(z); identically zero for SynthesisFilters output.
CausalPoly AliasTerm(const CausalPoly& h0, const CausalPoly& h1,
                     const CausalPoly& f0, const CausalPoly& f1);

// Assembles a bank from an analysis pair and certifies it. The returned
// bank carries the VerifyPr outcome; it does not throw on a failed
// certification, only when T(z) vanishes.
FilterBank MakeFilterBank(SymmetricFir h0, SymmetricFir h1,
                          DesignSpec provenance = {},
                          std::vector<double> zero_freqs = {});

// Keeps even-indexed samples.
std::vector<double> Downsample2(std::span<const double> x);
// Inserts a zero after every sample.
std::vector<double> Upsample2(std::span<const double> x);
// Full linear convolution (length |a| + |b| - 1).
std::vector<double> Convolve(std::span<const double> a,
                             std::span<const double> b);

struct ProcessResult {
  std::vector<double> y;
  // max |y[k] - c x[k-d]| / (|c| max|x|) over the steady-state region.
  double max_rel_error = 0.0;
  // Input indices j in [first, last) compared against y[j + d].
  std::size_t region_begin = 0;
  std::size_t region_end = 0;
};

// Runs x through analysis, decimation by 2, expansion by 2 and synthesis.
// The compared steady-state region drops `delay` input samples at each end
// (the whole input when that would leave nothing). x must be non-empty.
ProcessResult ProcessBank(const FilterBank& bank, std::span<const double> x);

enum class IdealResponse { kLowpass, kHighpass };

struct ResponseMetrics {
  double mse = 0.0;
  // -10 log10(mse); +inf when mse == 0.
  double db = 0.0;
  int grid_size = 0;
  IdealResponse ideal = IdealResponse::kLowpass;
};

// Mean squared deviation of |H(e^jw)| from the ideal half-band response on
// the closed grid w_k = k pi / (K - 1). The ideal is 1 on the passband side,
// 0 on the other and 0.5 exactly at pi/2. Throws std::invalid_argument for
// grid_size < 64.
ResponseMetrics Mse(const CausalPoly& filter, IdealResponse ideal,
                    int grid_size = 1024);

// -10 log10(mse), +inf for mse == 0.
double MseToDb(double mse);

// Frequencies k pi / (K - 1), k = 0..K-1.
std::vector<double> UniformGrid(int grid_size);

struct CaseAReport {
  bool ok = false;
  std::string diagnostics;
};

// Checks the odd/odd symmetric linear-phase PR configuration: both filters
// symmetric with odd length, lengths differing by an odd multiple of 2.
CaseAReport ValidateCaseA(const CausalPoly& h0, const CausalPoly& h1);

}  // namespace qmfpr

#endif  // QMFPR_ANALYSIS_H_
