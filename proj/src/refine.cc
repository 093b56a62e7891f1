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

#include "qmfpr/refine.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "qmfpr/errors.h"
#include "qmfpr/qmf_core.h"

namespace qmfpr {

void RefinementSpec::Validate() const {
  if (m < 1) throw std::invalid_argument("refinement order m must be >= 1");
  if (static_cast<int>(zero_freqs.size()) != m) {
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " zero frequencies, got " +
                                std::to_string(zero_freqs.size()));
  }
  for (std::size_t q = 0; q < zero_freqs.size(); ++q) {
    const double w = zero_freqs[q];
    if (!(w >= 0.0 && w < std::numbers::pi)) {
      throw std::invalid_argument("zero frequency outside [0, pi): " +
                                  std::to_string(w));
    }
    // Repeated frequencies pass here and surface as SingularRefinement.
    if (q > 0 && w < zero_freqs[q - 1]) {
      throw std::invalid_argument("zero frequencies must be increasing");
    }
  }
}

EPoly BuildE(const std::vector<double>& free) {
  if (free.empty()) {
    throw std::invalid_argument("BuildE: refinement order must be >= 1");
  }
  const std::size_t m = free.size();
  std::vector<double> coeffs(4 * m - 1, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    coeffs[2 * j] = free[j];
    coeffs[4 * m - 2 - 2 * j] = free[j];
  }
  return EPoly{free, CausalPoly(std::move(coeffs))};
}

std::vector<double> DefaultZeroFreqs(int m, const BandEdges& edges) {
  if (m < 1) throw std::invalid_argument("DefaultZeroFreqs: m must be >= 1");
  std::vector<double> freqs(m);
  for (int q = 0; q < m; ++q) freqs[q] = q * edges.wp / m;
  return freqs;
}

CausalPoly ExtendMate(const CausalPoly& h0, const CausalPoly& h1,
                      const EPoly& e) {
  const std::size_t m = e.free.size();
  return Add(Delay(h1, 2 * m), Multiply(e.expansion, h0));
}

namespace {

constexpr double kPivotFloor = 1e-12;

// Amplitude of `p` about `center`; p must be symmetric about it.
double AmplitudeAbout(const CausalPoly& p, std::size_t center, double omega) {
  if (p.size() != 2 * center + 1) {
    throw std::logic_error("refinement terms do not share a common center");
  }
  return Amplitude(SymmetricFir(p), omega);
}

}  // namespace

double ClosedFormE0(const SymmetricFir& h0, const SymmetricFir& h1,
                    double omega) {
  // Amplitude of (1 + z^-2) H0 about its center is 2 cos(w) A_H0(w).
  const double gain = 2.0 * std::cos(omega) * Amplitude(h0, omega);
  if (std::abs(gain) < kPivotFloor * h0.poly().MaxAbs()) {
    throw SingularRefinement("E(z) H0(z) has no gain at the requested zero");
  }
  return -Amplitude(h1, omega) / gain;
}

std::vector<double> SolveZeroForcing(const SymmetricFir& h0,
                                     const SymmetricFir& h1,
                                     const std::vector<double>& zero_freqs) {
  const std::size_t m = zero_freqs.size();
  if (m == 0) throw std::invalid_argument("SolveZeroForcing: no zeros");
  if (h0.size() != h1.size() + 2) {
    throw std::invalid_argument("expected len(h1) == len(h0) - 2");
  }
  const std::size_t center = h0.center() + 2 * m - 1;
  // Delayed mate is shorter than E*H0 by 2m taps; pad its tail so both
  // share the center.
  const CausalPoly shifted =
      Add(Delay(h1.poly(), 2 * m), CausalPoly::Zeros(2 * center + 1));

  std::vector<CausalPoly> basis;
  basis.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> unit(m, 0.0);
    unit[j] = 1.0;
    basis.push_back(Multiply(BuildE(unit).expansion, h0.poly()));
  }

  DenseSystem sys;
  sys.dim = m;
  sys.matrix.assign(m * m, 0.0);
  sys.rhs.assign(m, 0.0);
  for (std::size_t q = 0; q < m; ++q) {
    const double w = zero_freqs[q];
    sys.rhs[q] = -AmplitudeAbout(shifted, center, w);
    for (std::size_t j = 0; j < m; ++j) {
      sys.at(q, j) = AmplitudeAbout(basis[j], center, w);
    }
  }
  try {
    return Solve(sys);
  } catch (const SingularSystem& e) {
    throw SingularRefinement(std::string("refinement system: ") + e.what());
  }
}

RefinementResult RefineH1(const SymmetricFir& h0, const SymmetricFir& h1,
                          const RefinementSpec& spec) {
  spec.Validate();
  if (h0.size() != h1.size() + 2) {
    throw std::invalid_argument("RefineH1: expected len(h1) == len(h0) - 2");
  }
  const std::vector<double> free =
      spec.m == 1
          ? std::vector<double>{ClosedFormE0(h0, h1, spec.zero_freqs[0])}
          : SolveZeroForcing(h0, h1, spec.zero_freqs);

  EPoly e = BuildE(free);
  SymmetricFir raw(ExtendMate(h0.poly(), h1.poly(), e));
  SymmetricFir normalized = NormalizePassband(raw);
  return RefinementResult{std::move(e), std::move(raw), std::move(normalized)};
}

FilterBank DesignBank(const DesignSpec& spec) {
  spec.Validate();
  const SymmetricFir h0 = DesignH0(spec);
  SymmetricFir h1 = NormalizePassband(SolveMate(h0));
  std::vector<double> zeros;
  if (spec.m >= 1) {
    zeros = spec.zero_freqs.empty() ? DefaultZeroFreqs(spec.m, spec.edges)
                                    : spec.zero_freqs;
    h1 = RefineH1(h0, h1, RefinementSpec{spec.m, zeros}).h1;
  }
  return MakeFilterBank(h0, std::move(h1), spec, std::move(zeros));
}

}  // namespace qmfpr
