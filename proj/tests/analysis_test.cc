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
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "qmfpr/errors.h"
#include "qmfpr/qmf_core.h"
#include "qmfpr/refine.h"

namespace qmfpr {
namespace {

using ::testing::ElementsAre;

constexpr double kPi = std::numbers::pi;

const CausalPoly kToyH0({1, 2, 3, 2, 1});
const CausalPoly kToyH1({-0.5, -1, -0.5});

FilterBank DesignedBank(int n, WindowKind kind, int m) {
  DesignSpec spec;
  spec.n = n;
  spec.m = m;
  spec.window = WindowSpec::WithDefaults(kind);
  return DesignBank(spec);
}

TEST(TransferTest, Examples) {
  EXPECT_THAT(Transfer(kToyH0, kToyH1).vec(), ElementsAre(0, 0, 0, 1, 0, 0, 0));
  EXPECT_THAT(Transfer({1.0}, {1.0}).vec(), ElementsAre(0.0));
}

TEST(TransferTest, MatchesBruteForceExpansion) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h0 = testing::RandomVector(rng, 1 + trial % 9);
    const auto h1 = testing::RandomVector(rng, 1 + (trial * 7) % 11);
    EXPECT_LE(testing::MaxAbsDiff(Transfer(CausalPoly(h0), CausalPoly(h1)).vec(),
                                  testing::TransferByExpansion(h0, h1)),
              1e-15);
  }
}

TEST(TransferPropertyTest, EvenTermsCancelForSymmetricOddPairs) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const CausalPoly h0(testing::RandomSymmetric(rng, 1 + trial % 12));
    const CausalPoly h1(testing::RandomSymmetric(rng, (trial * 5) % 10));
    const CausalPoly t = Transfer(h0, h1);
    const double c = t.MaxAbs();
    for (std::size_t k = 0; k < t.size(); k += 2) {
      EXPECT_LE(std::abs(t[k]), 1e-14 * c);
    }
  }
}

TEST(VerifyPrTest, ToyPair) {
  const PrReport pr = VerifyPr(kToyH0, kToyH1);
  EXPECT_EQ(pr.delay, 3);
  EXPECT_EQ(pr.scale, 1.0);
  EXPECT_EQ(pr.max_spurious, 0.0);
  EXPECT_TRUE(pr.pass);
}

TEST(VerifyPrTest, DesignedBasicPair) {
  DesignSpec spec;
  spec.n = 10;
  const FilterBank bank = DesignPair(spec);
  const PrReport pr = VerifyPr(bank.h0.poly(), bank.h1.poly());
  EXPECT_EQ(pr.delay, 19);
  EXPECT_LE(pr.max_spurious, 1e-9);
  // Independent convolution agrees on the single surviving term.
  const auto t = testing::TransferByExpansion(bank.h0.poly().vec(),
                                              bank.h1.poly().vec());
  EXPECT_NEAR(t[19], pr.scale, 1e-15);
}

TEST(VerifyPrTest, BrokenPairFails) {
  // Brute force gives T = 2z^-1 + 4z^-3 + 2z^-5 for h1 = [1, 0, 1].
  const auto t = testing::TransferByExpansion(kToyH0.vec(), {1, 0, 1});
  EXPECT_THAT(t, ElementsAre(0, 2, 0, 4, 0, 2, 0));
  double peak = 0, second = 0;
  for (double v : t) {
    if (std::abs(v) > peak) {
      second = peak;
      peak = std::abs(v);
    } else {
      second = std::max(second, std::abs(v));
    }
  }
  ASSERT_GT(second / peak, 0.1);
  const PrReport pr = VerifyPr(kToyH0, {1, 0, 1});
  EXPECT_FALSE(pr.pass);
  EXPECT_GT(pr.max_spurious, 0.1);
}

TEST(VerifyPrTest, VanishingTransferThrows) {
  EXPECT_THROW(VerifyPr({1.0}, {1.0}), NoDelayFound);
}

TEST(SynthesisFiltersTest, Examples) {
  const auto [f0, f1] = SynthesisFilters(kToyH0, kToyH1);
  EXPECT_THAT(f0.vec(), ElementsAre(-0.5, 1, -0.5));
  EXPECT_THAT(f1.vec(), ElementsAre(-1, 2, -3, 2, -1));
}

TEST(SynthesisFiltersTest, AliasTermCancels) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const CausalPoly h0(testing::RandomVector(rng, 1 + trial % 15));
    const CausalPoly h1(testing::RandomVector(rng, 1 + (trial * 3) % 13));
    const auto [f0, f1] = SynthesisFilters(h0, h1);
    EXPECT_LE(AliasTerm(h0, h1, f0, f1).MaxAbs(), 1e-15);
  }
  for (int n : {3, 10, 20}) {
    const FilterBank bank = DesignedBank(n, WindowKind::kKaiser, 2);
    EXPECT_LE(AliasTerm(bank.h0.poly(), bank.h1.poly(), bank.f0, bank.f1).MaxAbs(),
              1e-12 * std::abs(bank.scale));
  }
}

TEST(ResamplingTest, Conventions) {
  const std::vector<double> x = {1, 2, 3, 4, 5};
  EXPECT_THAT(Downsample2(x), ElementsAre(1, 3, 5));
  EXPECT_THAT(Upsample2(std::vector<double>{1, 3}), ElementsAre(1, 0, 3, 0));
}

TEST(ProcessBankTest, ImpulseReproducesTransfer) {
  for (int m : {0, 1, 2}) {
    const FilterBank bank = DesignedBank(7, WindowKind::kHamming, m);
    const CausalPoly t = Transfer(bank.h0.poly(), bank.h1.poly());
    const ProcessResult r = ProcessBank(bank, std::vector<double>{1.0});
    ASSERT_GE(r.y.size(), t.size());
    for (std::size_t k = 0; k < r.y.size(); ++k) {
      const double expected = k < t.size() ? t[k] : 0.0;
      EXPECT_NEAR(r.y[k], expected, 1e-12) << "k=" << k;
    }
  }
}

TEST(ProcessBankTest, ZerosInZerosOut) {
  const FilterBank bank = DesignedBank(4, WindowKind::kRectangular, 1);
  const ProcessResult r = ProcessBank(bank, std::vector<double>(50, 0.0));
  for (double v : r.y) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(r.max_rel_error, 0.0);
}

TEST(ProcessBankTest, RandomSignalSteadyState) {
  std::mt19937 rng(67);
  const auto x = testing::RandomVector(rng, 4096);
  const FilterBank bank = DesignedBank(10, WindowKind::kGaussian, 1);
  const ProcessResult r = ProcessBank(bank, x);
  EXPECT_EQ(r.region_begin, 21u);
  EXPECT_EQ(r.region_end, 4096u - 21u);
  EXPECT_LE(r.max_rel_error, 1e-9);
  // Direct comparison against c * x[k - d].
  for (std::size_t j = r.region_begin; j < r.region_end; j += 97) {
    EXPECT_NEAR(r.y[j + bank.delay], bank.scale * x[j], 1e-9);
  }
}

TEST(ProcessBankTest, RejectsEmptySignal) {
  const FilterBank bank = DesignedBank(2, WindowKind::kRectangular, 0);
  EXPECT_THROW(ProcessBank(bank, std::vector<double>{}), std::invalid_argument);
}

TEST(MseTest, ZeroFilterAgainstLowpass) {
  const ResponseMetrics r = Mse(CausalPoly::Zeros(5), IdealResponse::kLowpass);
  // 512 of the 1024 closed-grid points lie strictly below pi/2.
  EXPECT_DOUBLE_EQ(r.mse, 0.5);
  EXPECT_EQ(r.grid_size, 1024);
}

TEST(MseTest, CutoffSampleUsesHalfHeight) {
  // K = 65 puts sample 32 exactly on pi/2.
  const std::vector<double> grid = UniformGrid(65);
  ASSERT_EQ(grid[32], kPi / 2);
  const ResponseMetrics r = Mse(CausalPoly::Zeros(1), IdealResponse::kHighpass, 65);
  EXPECT_NEAR(r.mse, (32 * 1.0 + 0.25) / 65, 1e-15);
}

TEST(MseTest, DbConversion) {
  EXPECT_NEAR(MseToDb(0.047), 13.2790, 1e-4);
  EXPECT_NEAR(MseToDb(0.017), 17.6955, 1e-4);
  EXPECT_EQ(MseToDb(0.0), std::numeric_limits<double>::infinity());
  EXPECT_THROW(Mse(CausalPoly({1.0}), IdealResponse::kLowpass, 63),
               std::invalid_argument);
}

TEST(MseTest, InvariantUnderReversal) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> h = testing::RandomVector(rng, 3 + trial);
    const ResponseMetrics fwd = Mse(CausalPoly(h), IdealResponse::kLowpass, 256);
    std::reverse(h.begin(), h.end());
    const ResponseMetrics rev = Mse(CausalPoly(h), IdealResponse::kLowpass, 256);
    EXPECT_NEAR(fwd.mse, rev.mse, 1e-14);
  }
}

TEST(ValidateCaseATest, Examples) {
  const FilterBank basic = DesignPair(DesignSpec{});
  EXPECT_TRUE(ValidateCaseA(basic.h0.poly(), basic.h1.poly()).ok);
  const FilterBank refined = DesignedBank(10, WindowKind::kRectangular, 1);
  EXPECT_TRUE(ValidateCaseA(refined.h0.poly(), refined.h1.poly()).ok);

  const CaseAReport bad =
      ValidateCaseA(CausalPoly::Zeros(5), CausalPoly::Zeros(9));
  EXPECT_FALSE(bad.ok);
  EXPECT_THAT(bad.diagnostics, ::testing::HasSubstr("length difference 4"));
  EXPECT_FALSE(ValidateCaseA({1, 2, 1}, {1, 2}).ok);
  EXPECT_FALSE(ValidateCaseA({1, 2, 3}, {1}).ok);
}

TEST(BankPropertyTest, DelayLawAndTaxonomy) {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const FilterBank bank = DesignedBank(n, WindowKind::kKaiser, m);
      EXPECT_EQ(bank.delay, 2 * n - 1 + 2 * m);
      EXPECT_EQ(bank.delay % 2, 1);
      EXPECT_TRUE(ValidateCaseA(bank.h0.poly(), bank.h1.poly()).ok);
      EXPECT_EQ(bank.f0, Alternate(bank.h1.poly()));
      EXPECT_EQ(bank.f1, Negate(Alternate(bank.h0.poly())));
    }
  }
}

}  // namespace
}  // namespace qmfpr
