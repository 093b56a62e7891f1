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

#ifndef QMFPR_BANK_IO_H_
#define QMFPR_BANK_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmfpr/analysis.h"
#include "qmfpr/poly.h"
#include "qmfpr/prototype.h"

namespace qmfpr {

inline constexpr int kBankFormatVersion = 1;

// Malformed, truncated or unreadable bank file.
class BankFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk form of a bank. Coefficients are kept as plain polynomials so a
// damaged (e.g. asymmetric) file can still be loaded and rejected by
// verification rather than by the parser.
struct BankFile {
  int format_version = kBankFormatVersion;
  int n = 0;
  int m = 0;
  BandEdges edges{};
  WindowSpec window;
  CausalPoly h0{0.0};
  CausalPoly h1{0.0};
  CausalPoly f0{0.0};
  CausalPoly f1{0.0};
  int delay = 0;
  double scale = 0.0;
  std::vector<double> zero_freqs;
};

BankFile ToBankFile(const FilterBank& bank);

// Throws std::invalid_argument if h0/h1 are not symmetric odd-length.
FilterBank ToFilterBank(const BankFile& file);

// JSON text with shortest round-trip decimals for every coefficient.
std::string SerializeBank(const BankFile& file);
BankFile ParseBank(std::string_view text);

void SaveBank(const BankFile& file, const std::filesystem::path& path);
BankFile LoadBank(const std::filesystem::path& path);

}  // namespace qmfpr

#endif  // QMFPR_BANK_IO_H_
