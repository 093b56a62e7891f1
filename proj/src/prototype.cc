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

#include "qmfpr/prototype.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmfpr {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinDcSum = 1e-9;
constexpr double kBesselTruncation = 1e-12;

}  // namespace

BandEdges BandEdges::Make(double wp, double ws) {
  if (!(std::isfinite(wp) && std::isfinite(ws) && 0.0 < wp && wp < ws &&
        ws < kPi)) {
    throw std::invalid_argument("band edges must satisfy 0 < wp < ws < pi (wp=" +
                                std::to_string(wp) +
                                ", ws=" + std::to_string(ws) + ")");
  }
  return BandEdges{wp, ws};
}

BandEdges BandEdges::SymmetricAboutHalfBand(double delta_frac) {
  return Make(kPi / 2 - delta_frac * kPi, kPi / 2 + delta_frac * kPi);
}

std::string_view WindowKindName(WindowKind kind) {
  switch (kind) {
    case WindowKind::kRectangular:
      return "rect";
    case WindowKind::kHamming:
      return "hamming";
    case WindowKind::kGaussian:
      return "gauss";
    case WindowKind::kKaiser:
      return "kaiser";
  }
  return "rect";
}

std::optional<WindowKind> ParseWindowKind(std::string_view name) {
  if (name == "rect" || name == "rectangular") return WindowKind::kRectangular;
  if (name == "hamming") return WindowKind::kHamming;
  if (name == "gauss" || name == "gaussian") return WindowKind::kGaussian;
  if (name == "kaiser") return WindowKind::kKaiser;
  return std::nullopt;
}

WindowSpec WindowSpec::WithDefaults(WindowKind kind) {
  switch (kind) {
    case WindowKind::kGaussian:
      return {kind, kDefaultGaussianAlpha};
    case WindowKind::kKaiser:
      return {kind, kDefaultKaiserBeta};
    default:
      return {kind, 0.0};
  }
}

void WindowSpec::Validate() const {
  if (!std::isfinite(param)) {
    throw std::invalid_argument("window parameter must be finite");
  }
  if (kind == WindowKind::kGaussian && param <= 0.0) {
    throw std::invalid_argument("gaussian alpha must be > 0");
  }
  if (kind == WindowKind::kKaiser && param < 0.0) {
    throw std::invalid_argument("kaiser beta must be >= 0");
  }
}

void DesignSpec::Validate() const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (grid_size < 64) throw std::invalid_argument("grid_size must be >= 64");
  BandEdges::Make(edges.wp, edges.ws);
  window.Validate();
  if (!zero_freqs.empty() && static_cast<int>(zero_freqs.size()) != m) {
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " zero frequencies, got " +
                                std::to_string(zero_freqs.size()));
  }
}

SymmetricFir TrapezoidTaps(const BandEdges& edges, int n) {
  if (n < 1) throw std::invalid_argument("TrapezoidTaps: n must be >= 1");
  if (edges.ws == edges.wp) {
    throw std::invalid_argument("TrapezoidTaps: wp == ws");
  }
  const double span = 2.0 * kPi * (edges.ws - edges.wp);
  const double c0 = edges.ws * edges.ws / span;
  const double b0 = edges.wp * edges.wp / span;

  std::vector<double> taps(2 * n + 1);
  for (int k = 0; k <= n; ++k) {
    const double sc = Sinc(edges.ws * k / (2.0 * kPi));
    const double sb = Sinc(edges.wp * k / (2.0 * kPi));
    const double tap = c0 * sc * sc - b0 * sb * sb;
    taps[n + k] = tap;
    taps[n - k] = tap;
  }
  return SymmetricFir(CausalPoly(std::move(taps)));
}

double BesselI0(double x) {
  // sum_k ((x/2)^k / k!)^2
  const double half = 0.5 * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= (half / k) * (half / k);
    sum += term;
    if (term < kBesselTruncation * sum) break;
  }
  return sum;
}

std::vector<double> WindowWeights(const WindowSpec& spec, int length) {
  if (length < 1 || length % 2 == 0) {
    throw std::invalid_argument("WindowWeights: length must be odd and >= 1, got " +
                                std::to_string(length));
  }
  spec.Validate();
  std::vector<double> w(length, 1.0);
  if (length == 1) return w;

  const int mid = (length - 1) / 2;
  switch (spec.kind) {
    case WindowKind::kRectangular:
      break;
    case WindowKind::kHamming:
      for (int k = 0; k < length; ++k) {
        w[k] = 0.54 - 0.46 * std::cos(2.0 * kPi * k / (length - 1));
      }
      break;
    case WindowKind::kGaussian:
      for (int k = 0; k < length; ++k) {
        const double x = spec.param * (k - mid) / mid;
        w[k] = std::exp(-0.5 * x * x);
      }
      break;
    case WindowKind::kKaiser: {
      const double denom = BesselI0(spec.param);
      for (int k = 0; k < length; ++k) {
        const double r = static_cast<double>(k - mid) / mid;
        w[k] = BesselI0(spec.param * std::sqrt(std::max(0.0, 1.0 - r * r))) /
               denom;
      }
      break;
    }
  }
  // Mirror so the taper is exactly symmetric and peaks at exactly 1.
  for (int k = 0; k < mid; ++k) w[length - 1 - k] = w[k];
  w[mid] = 1.0;
  return w;
}

SymmetricFir DesignH0(const DesignSpec& spec) {
  spec.Validate();
  const SymmetricFir taps = TrapezoidTaps(spec.edges, spec.n);
  const std::vector<double> weights =
      WindowWeights(spec.window, static_cast<int>(taps.size()));

  std::vector<double> h(taps.size());
  double dc = 0.0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    h[k] = taps[k] * weights[k];
    dc += h[k];
  }
  if (dc <= kMinDcSum) {
    throw std::invalid_argument("DesignH0: degenerate prototype, DC sum " +
                                std::to_string(dc));
  }
  for (double& c : h) c /= dc;
  return SymmetricFir(CausalPoly(std::move(h)));
}

}  // namespace qmfpr
