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

#include "qmfpr/bank_io.h"

#include <cstring>
#include <filesystem>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qmfpr/refine.h"

namespace qmfpr {
namespace {

BankFile Designed() {
  DesignSpec spec;
  spec.n = 9;
  spec.m = 2;
  spec.window = WindowSpec::WithDefaults(WindowKind::kKaiser);
  return ToBankFile(DesignBank(spec));
}

bool BitIdentical(const CausalPoly& a, const CausalPoly& b) {
  return a.size() == b.size() &&
         std::memcmp(a.coeffs().data(), b.coeffs().data(),
                     a.size() * sizeof(double)) == 0;
}

TEST(BankIoTest, RoundTripIsBitIdentical) {
  const BankFile file = Designed();
  const BankFile back = ParseBank(SerializeBank(file));
  EXPECT_TRUE(BitIdentical(back.h0, file.h0));
  EXPECT_TRUE(BitIdentical(back.h1, file.h1));
  EXPECT_TRUE(BitIdentical(back.f0, file.f0));
  EXPECT_TRUE(BitIdentical(back.f1, file.f1));
  EXPECT_EQ(back.delay, file.delay);
  EXPECT_EQ(back.scale, file.scale);
  EXPECT_EQ(back.n, 9);
  EXPECT_EQ(back.m, 2);
  EXPECT_EQ(back.window.kind, WindowKind::kKaiser);
  EXPECT_EQ(back.edges.wp, file.edges.wp);
  EXPECT_EQ(back.zero_freqs, file.zero_freqs);
  // Saving the loaded file reproduces the same text.
  EXPECT_EQ(SerializeBank(back), SerializeBank(file));
  EXPECT_TRUE(VerifyPr(back.h0, back.h1).pass);
}

TEST(BankIoTest, RandomCoefficientsRoundTrip) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  BankFile file = Designed();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(31);
    for (double& x : v) x = std::ldexp(mant(rng), expo(rng) / 10);
    file.h1 = CausalPoly(v);
    EXPECT_TRUE(BitIdentical(ParseBank(SerializeBank(file)).h1, file.h1));
  }
}

TEST(BankIoTest, MalformedDocuments) {
  const std::string good = SerializeBank(Designed());
  EXPECT_THROW(ParseBank(good.substr(0, good.size() / 2)), BankFormatError);
  EXPECT_THROW(ParseBank("{}"), BankFormatError);
  EXPECT_THROW(ParseBank("[1,2,3]"), BankFormatError);

  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"format_version\": 1"),
                        std::strlen("\"format_version\": 1"),
                        "\"format_version\": 2");
  EXPECT_THROW(ParseBank(wrong_version), BankFormatError);

  std::string empty_h0 = good;
  const auto pos = empty_h0.find("\"h0\": [");
  const auto end = empty_h0.find(']', pos);
  empty_h0.replace(pos, end - pos + 1, "\"h0\": []");
  EXPECT_THROW(ParseBank(empty_h0), BankFormatError);
}

TEST(BankIoTest, FileSaveLoad) {
  const auto path = std::filesystem::temp_directory_path() / "qmfpr_bank_io_test.json";
  const BankFile file = Designed();
  SaveBank(file, path);
  EXPECT_TRUE(BitIdentical(LoadBank(path).h1, file.h1));
  std::filesystem::remove(path);
  EXPECT_THROW(LoadBank(path), BankFormatError);
}

TEST(BankIoTest, ToFilterBankRequiresLinearPhase) {
  BankFile file = Designed();
  EXPECT_NO_THROW(ToFilterBank(file));
  std::vector<double> h1 = file.h1.vec();
  h1[0] += 1e-3;
  file.h1 = CausalPoly(h1);
  EXPECT_THROW(ToFilterBank(file), std::invalid_argument);
}

}  // namespace
}  // namespace qmfpr
