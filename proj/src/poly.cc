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

#include "qmfpr/poly.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmfpr {

CausalPoly::CausalPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("CausalPoly: empty coefficient sequence");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("CausalPoly: non-finite coefficient");
    }
  }
}

CausalPoly CausalPoly::Zeros(std::size_t length) {
  return CausalPoly(std::vector<double>(std::max<std::size_t>(length, 1), 0.0));
}

double CausalPoly::MaxAbs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool IsSymmetricOddLength(const CausalPoly& p, double rel_tol) {
  const std::size_t len = p.size();
  if (len % 2 == 0) return false;
  const double bound = rel_tol * p.MaxAbs();
  for (std::size_t k = 0; k < len / 2; ++k) {
    if (std::abs(p[k] - p[len - 1 - k]) > bound) return false;
  }
  return true;
}

SymmetricFir::SymmetricFir(CausalPoly poly) : poly_(std::move(poly)) {
  if (poly_.size() % 2 == 0) {
    throw std::invalid_argument("SymmetricFir: even length " +
                                std::to_string(poly_.size()));
  }
  if (!IsSymmetricOddLength(poly_)) {
    throw std::invalid_argument("SymmetricFir: coefficients not symmetric");
  }
}

CausalPoly Multiply(const CausalPoly& p, const CausalPoly& q) {
  std::vector<double> out(p.size() + q.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      out[i + j] += p[i] * q[j];
    }
  }
  return CausalPoly(std::move(out));
}

CausalPoly Alternate(const CausalPoly& p) {
  std::vector<double> out = p.vec();
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return CausalPoly(std::move(out));
}

CausalPoly Add(const CausalPoly& p, const CausalPoly& q) {
  std::vector<double> out(std::max(p.size(), q.size()), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) out[k] += p[k];
  for (std::size_t k = 0; k < q.size(); ++k) out[k] += q[k];
  return CausalPoly(std::move(out));
}

CausalPoly Subtract(const CausalPoly& p, const CausalPoly& q) {
  return Add(p, Negate(q));
}

CausalPoly Scale(const CausalPoly& p, double factor) {
  std::vector<double> out = p.vec();
  for (double& c : out) c *= factor;
  return CausalPoly(std::move(out));
}

CausalPoly Negate(const CausalPoly& p) { return Scale(p, -1.0); }

CausalPoly Delay(const CausalPoly& p, std::size_t k) {
  std::vector<double> out(k, 0.0);
  out.insert(out.end(), p.vec().begin(), p.vec().end());
  return CausalPoly(std::move(out));
}

std::complex<double> Evaluate(const CausalPoly& p, double omega) {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k] * std::polar(1.0, -omega * static_cast<double>(k));
  }
  return acc;
}

std::vector<std::complex<double>> Evaluate(const CausalPoly& p,
                                           std::span<const double> omegas) {
  std::vector<std::complex<double>> out;
  out.reserve(omegas.size());
  for (double w : omegas) out.push_back(Evaluate(p, w));
  return out;
}

double Amplitude(const SymmetricFir& p, double omega) {
  const std::size_t mid = p.center();
  double acc = p[mid];
  for (std::size_t k = 1; k <= mid; ++k) {
    acc += 2.0 * p[mid - k] * std::cos(static_cast<double>(k) * omega);
  }
  return acc;
}

}  // namespace qmfpr
