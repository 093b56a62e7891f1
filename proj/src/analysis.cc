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

#include "qmfpr/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qmfpr/errors.h"

namespace qmfpr {
namespace {

constexpr double kMinScale = 1e-9;

}  // namespace

CausalPoly Transfer(const CausalPoly& h0, const CausalPoly& h1) {
  const CausalPoly p = Multiply(h0, Alternate(h1));
  const CausalPoly q = Multiply(h1, Alternate(h0));
  return Scale(Subtract(p, q), 0.5);
}

PrReport VerifyPr(const CausalPoly& h0, const CausalPoly& h1, double tol) {
  const CausalPoly t = Transfer(h0, h1);
  std::size_t peak = 0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (std::abs(t[k]) > std::abs(t[peak])) peak = k;
  }
  const double c = t[peak];
  if (std::abs(c) <= kMinScale) {
    throw NoDelayFound("T(z) is numerically zero (max |T_k| = " +
                       std::to_string(std::abs(c)) + ")");
  }
  double spurious = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k != peak) spurious = std::max(spurious, std::abs(t[k]));
  }
  PrReport report;
  report.delay = static_cast<int>(peak);
  report.scale = c;
  report.max_spurious = spurious / std::abs(c);
  report.pass = report.max_spurious <= tol;
  return report;
}

std::pair<CausalPoly, CausalPoly> SynthesisFilters(const CausalPoly& h0,
                                                   const CausalPoly& h1) {
  return {Alternate(h1), Negate(Alternate(h0))};
}

CausalPoly AliasTerm(const CausalPoly& h0, const CausalPoly& h1,
                     const CausalPoly& f0, const CausalPoly& f1) {
  return Add(Multiply(Alternate(h0), f0), Multiply(Alternate(h1), f1));
}

FilterBank MakeFilterBank(SymmetricFir h0, SymmetricFir h1,
                          DesignSpec provenance,
                          std::vector<double> zero_freqs) {
  auto [f0, f1] = SynthesisFilters(h0.poly(), h1.poly());
  const PrReport pr = VerifyPr(h0.poly(), h1.poly());
  return FilterBank{std::move(h0),      std::move(h1),
                    std::move(f0),      std::move(f1),
                    pr.delay,           pr.scale,
                    pr.max_spurious,    std::move(provenance),
                    std::move(zero_freqs)};
}

std::vector<double> Downsample2(std::span<const double> x) {
  std::vector<double> out;
  out.reserve((x.size() + 1) / 2);
  for (std::size_t k = 0; k < x.size(); k += 2) out.push_back(x[k]);
  return out;
}

std::vector<double> Upsample2(std::span<const double> x) {
  std::vector<double> out(2 * x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) out[2 * k] = x[k];
  return out;
}

std::vector<double> Convolve(std::span<const double> a,
                             std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

ProcessResult ProcessBank(const FilterBank& bank, std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("ProcessBank: empty signal");

  const std::vector<double> v0 = Downsample2(Convolve(bank.h0.coeffs(), x));
  const std::vector<double> v1 = Downsample2(Convolve(bank.h1.coeffs(), x));
  const std::vector<double> y0 = Convolve(bank.f0.coeffs(), Upsample2(v0));
  const std::vector<double> y1 = Convolve(bank.f1.coeffs(), Upsample2(v1));

  ProcessResult result;
  result.y.assign(std::max(y0.size(), y1.size()), 0.0);
  for (std::size_t k = 0; k < y0.size(); ++k) result.y[k] += y0[k];
  for (std::size_t k = 0; k < y1.size(); ++k) result.y[k] += y1[k];

  const std::size_t d = static_cast<std::size_t>(bank.delay);
  if (x.size() > 2 * d) {
    result.region_begin = d;
    result.region_end = x.size() - d;
  } else {
    result.region_begin = 0;
    result.region_end = x.size();
  }

  double peak = 0.0;
  for (double s : x) peak = std::max(peak, std::abs(s));
  if (peak == 0.0) {
    for (double s : result.y) {
      result.max_rel_error = std::max(result.max_rel_error, std::abs(s));
    }
    return result;
  }

  const double norm = std::abs(bank.scale) * peak;
  for (std::size_t j = result.region_begin; j < result.region_end; ++j) {
    const double got = j + d < result.y.size() ? result.y[j + d] : 0.0;
    const double err = std::abs(got - bank.scale * x[j]) / norm;
    result.max_rel_error = std::max(result.max_rel_error, err);
  }
  return result;
}

double MseToDb(double mse) {
  return mse > 0.0 ? -10.0 * std::log10(mse)
                   : std::numeric_limits<double>::infinity();
}

std::vector<double> UniformGrid(int grid_size) {
  std::vector<double> grid(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    grid[k] = k * std::numbers::pi / (grid_size - 1);
  }
  return grid;
}

ResponseMetrics Mse(const CausalPoly& filter, IdealResponse ideal,
                    int grid_size) {
  if (grid_size < 64) {
    throw std::invalid_argument("Mse: grid_size must be >= 64");
  }
  constexpr double kCutoff = std::numbers::pi / 2;
  const std::vector<double> grid = UniformGrid(grid_size);

  double acc = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    const double w = grid[k];
    double desired;
    if (w == kCutoff) {
      desired = 0.5;
    } else if (ideal == IdealResponse::kLowpass) {
      desired = w < kCutoff ? 1.0 : 0.0;
    } else {
      desired = w > kCutoff ? 1.0 : 0.0;
    }
    const double err = std::abs(Evaluate(filter, w)) - desired;
    acc += err * err;
  }

  ResponseMetrics metrics;
  metrics.mse = acc / grid_size;
  metrics.db = MseToDb(metrics.mse);
  metrics.grid_size = grid_size;
  metrics.ideal = ideal;
  return metrics;
}

CaseAReport ValidateCaseA(const CausalPoly& h0, const CausalPoly& h1) {
  std::ostringstream diag;
  bool ok = true;
  if (!IsSymmetricOddLength(h0)) {
    ok = false;
    diag << "h0 (length " << h0.size() << ") is not symmetric odd-length; ";
  }
  if (!IsSymmetricOddLength(h1)) {
    ok = false;
    diag << "h1 (length " << h1.size() << ") is not symmetric odd-length; ";
  }
  const std::size_t diff =
      h0.size() > h1.size() ? h0.size() - h1.size() : h1.size() - h0.size();
  if (diff % 4 != 2) {
    ok = false;
    diag << "length difference " << diff << " is not an odd multiple of 2; ";
  }
  CaseAReport report;
  report.ok = ok;
  report.diagnostics = ok ? "case (a): symmetric odd-length pair" : diag.str();
  return report;
}

}  // namespace qmfpr
