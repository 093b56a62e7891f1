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

#ifndef QMFPR_POLY_H_
#define QMFPR_POLY_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qmfpr {

// Finite causal z-polynomial: coefficient k multiplies z^(-k).
// Always holds at least one coefficient and no NaN/Inf entries.
class CausalPoly {
 public:
  // Throws std::invalid_argument on empty input or non-finite entries.
  explicit CausalPoly(std::vector<double> coeffs);
  CausalPoly(std::initializer_list<double> coeffs)
      : CausalPoly(std::vector<double>(coeffs)) {}

  // The zero polynomial with `length` coefficients.
  static CausalPoly Zeros(std::size_t length);

  std::size_t size() const { return coeffs_.size(); }
  std::size_t degree() const { return coeffs_.size() - 1; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const double> coeffs() const { return coeffs_; }
  const std::vector<double>& vec() const { return coeffs_; }

  // Largest |c_k|.
  double MaxAbs() const;

  bool operator==(const CausalPoly&) const = default;

 private:
  std::vector<double> coeffs_;
};

// Odd-length polynomial with mirror-symmetric coefficients (linear phase,
// integer group delay center()).
class SymmetricFir {
 public:
  // Relative tolerance (against the max-magnitude tap) for mirror symmetry.
  static constexpr double kSymmetryTolerance = 1e-12;

  // Throws std::invalid_argument if `poly` has even length or is not
  // symmetric within kSymmetryTolerance.
  explicit SymmetricFir(CausalPoly poly);
  SymmetricFir(std::initializer_list<double> coeffs)
      : SymmetricFir(CausalPoly(coeffs)) {}

  const CausalPoly& poly() const { return poly_; }
  std::size_t size() const { return poly_.size(); }
  std::size_t center() const { return (poly_.size() - 1) / 2; }
  double operator[](std::size_t k) const { return poly_[k]; }
  std::span<const double> coeffs() const { return poly_.coeffs(); }

  bool operator==(const SymmetricFir&) const = default;

 private:
  CausalPoly poly_;
};

// True iff `p` has odd length and c[k] == c[L-1-k] within `rel_tol` of the
// largest coefficient magnitude.
bool IsSymmetricOddLength(const CausalPoly& p,
                          double rel_tol = SymmetricFir::kSymmetryTolerance);

// Discrete convolution: (p*q)[i] = sum_k p[k] q[i-k].
CausalPoly Multiply(const CausalPoly& p, const CausalPoly& q);

// p(z) -> p(-z): flips the sign of odd-index coefficients.
CausalPoly Alternate(const CausalPoly& p);

// Coefficientwise sum; the shorter operand is zero-extended.
CausalPoly Add(const CausalPoly& p, const CausalPoly& q);
CausalPoly Subtract(const CausalPoly& p, const CausalPoly& q);
CausalPoly Scale(const CausalPoly& p, double factor);
CausalPoly Negate(const CausalPoly& p);

// z^(-k) * p(z).
CausalPoly Delay(const CausalPoly& p, std::size_t k);

// Frequency response sum_k p[k] e^(-j w k) at each frequency.
std::vector<std::complex<double>> Evaluate(const CausalPoly& p,
                                           std::span<const double> omegas);
std::complex<double> Evaluate(const CausalPoly& p, double omega);

// Zero-phase amplitude A(w) = p[M] + 2 sum_{k=1..M} p[M-k] cos(k w), so that
// Evaluate(p, w) == exp(-j w M) * A(w).
double Amplitude(const SymmetricFir& p, double omega);

}  // namespace qmfpr

#endif  // QMFPR_POLY_H_
