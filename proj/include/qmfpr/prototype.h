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

#ifndef QMFPR_PROTOTYPE_H_
#define QMFPR_PROTOTYPE_H_

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmfpr/poly.h"

namespace qmfpr {

// Low-pass prototype band edges in radians, 0 < passband < stopband < pi.
struct BandEdges {
  double wp;
  double ws;

  // Throws std::invalid_argument unless 0 < wp < ws < pi.
  static BandEdges Make(double wp, double ws);

  // Edges placed symmetrically about pi/2: (pi/2 - delta, pi/2 + delta),
  // `delta_frac` in units of pi.
  static BandEdges SymmetricAboutHalfBand(double delta_frac = 0.1);
};

enum class WindowKind { kRectangular, kHamming, kGaussian, kKaiser };

// "rect", "hamming", "gauss", "kaiser".
std::string_view WindowKindName(WindowKind kind);
std::optional<WindowKind> ParseWindowKind(std::string_view name);

inline constexpr double kDefaultGaussianAlpha = 2.5;
inline constexpr double kDefaultKaiserBeta = 6.0;

struct WindowSpec {
  WindowKind kind = WindowKind::kRectangular;
  // Gaussian alpha or Kaiser beta; ignored by the other windows.
  double param = 0.0;

  // Window with the default shape parameter for `kind`.
  static WindowSpec WithDefaults(WindowKind kind);
  // Throws std::invalid_argument for alpha <= 0 or beta < 0.
  void Validate() const;
};

struct DesignSpec {
  int n = 10;  // H0 has 2n+1 taps.
  BandEdges edges = BandEdges::SymmetricAboutHalfBand();
  WindowSpec window;
  int m = 1;  // Refinement order; 0 keeps the basic high-pass mate.
  int grid_size = 1024;
  // Explicit stop-band zeros for refinement; empty selects the default rule.
  std::vector<double> zero_freqs;

  // Throws std::invalid_argument on n < 1, m < 0, grid_size < 64, bad edges
  // or window parameters.
  void Validate() const;
};

// Squared-sinc trapezoid taps,
//   h[k] = C0 sinc^2(ws k / 2pi) - B0 sinc^2(wp k / 2pi),  k = -n..n,
// with C0 = ws^2 / (2pi (ws - wp)) and B0 = wp^2 / (2pi (ws - wp)).
// Its spectrum is the difference of two triangles: unit gain up to wp,
// linear roll-off to zero at ws.
SymmetricFir TrapezoidTaps(const BandEdges& edges, int n);

// Symmetric taper of odd `length` peaking at 1 in the middle.
std::vector<double> WindowWeights(const WindowSpec& spec, int length);

// Modified Bessel function of the first kind, order zero.
double BesselI0(double x);

// Windowed trapezoid prototype scaled to unit DC gain.
SymmetricFir DesignH0(const DesignSpec& spec);

inline double Sinc(double x) {
  if (x == 0.0) return 1.0;
  const double px = std::numbers::pi * x;
  return std::sin(px) / px;
}

}  // namespace qmfpr

#endif  // QMFPR_PROTOTYPE_H_
