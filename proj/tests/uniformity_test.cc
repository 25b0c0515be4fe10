// Copyright 2026 The kuniform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "gtest/gtest.h"
#include "kuniform/catalog.h"
#include "kuniform/error.h"
#include "kuniform/reductions.h"
#include "kuniform/uniformity.h"
#include "test_util.h"

namespace kuniform {
namespace {

UniformityReport Check(const PureState& psi, int k, CheckMode mode = CheckMode::kSizeKOnly,
                       int threads = 1) {
  UniformityOptions options;
  options.k = k;
  options.mode = mode;
  options.threads = threads;
  return CheckUniformity(psi, options);
}

TEST(CheckUniformityTest, BellIsOneUniform) {
  const UniformityReport r = Check(CatalogState("bell"), 1);
  EXPECT_TRUE(r.is_k_uniform);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.tolerance, 0.0);
  ASSERT_EQ(r.verdicts.size(), 2u);
  for (const auto& v : r.verdicts) EXPECT_EQ(v.purity_trace.exact, Rational(1, 2));
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(CheckUniformityTest, ElevenQubitStateIsThreeUniform) {
  const UniformityReport r = Check(CatalogState("psi11"), 3);
  EXPECT_TRUE(r.is_k_uniform);
  ASSERT_EQ(r.verdicts.size(), 165u);
  for (const auto& v : r.verdicts) {
    EXPECT_EQ(v.purity_trace.exact, Rational(1, 8));
    EXPECT_EQ(v.purity_invariant.exact, Rational(1, 8));
    EXPECT_EQ(v.deviation, 0.0);
  }
  EXPECT_EQ(r.max_deviation, 0.0);
}

TEST(CheckUniformityTest, ProductStateFails) {
  const UniformityReport r = Check(MakeState(2, {{"00", 1, 0}}), 1);
  EXPECT_FALSE(r.is_k_uniform);
  EXPECT_EQ(r.max_deviation, 0.5);
  EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(CheckUniformityTest, FifteenQubitStateIsThreeUniform) {
  const UniformityReport r = Check(CatalogState("psi15"), 3, CheckMode::kSizeKOnly, 4);
  EXPECT_TRUE(r.is_k_uniform);
  EXPECT_EQ(r.verdicts.size(), 455u);
}

TEST(CheckUniformityTest, AllSizesModeCountsEveryLayer) {
  const UniformityReport r = Check(CatalogState("psi12"), 3, CheckMode::kAllSizes);
  EXPECT_EQ(r.verdicts.size(), 12u + 66u + 220u);
  EXPECT_TRUE(r.is_k_uniform);
}

TEST(CheckUniformityTest, WitnessesAreTheSmallestFailingSubsets) {
  // qubit 3 is a product factor; pairs containing it fail but so does {3} itself.
  const double h = 1 / std::sqrt(2.0);
  const PureState psi = MakeState(3, {{"000", h, 0}, {"110", h, 0}});
  const UniformityReport r = Check(psi, 1);
  EXPECT_FALSE(r.is_k_uniform);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].labels(), std::vector<int>{3});
}

TEST(CheckUniformityTest, SignedEightQubitStateFailsWithSingleQubitWitnesses) {
  const UniformityReport r = Check(CatalogState("psiM8"), 3);
  EXPECT_FALSE(r.is_k_uniform);
  EXPECT_EQ(r.verdicts.size(), 56u);
  EXPECT_EQ(r.witnesses.size(), 8u);
  for (const auto& w : r.witnesses) EXPECT_EQ(w.size(), 1);
  EXPECT_EQ(ComputePurity(PartialTrace(CatalogState("psiM8"), QubitSubset::Create({1}, 8))).exact,
            Rational(69, 128));
}

TEST(CheckUniformityTest, BeyondHalfIsFlaggedAndNeverPasses) {
  const UniformityReport r = Check(CatalogState("ghz4"), 3);
  EXPECT_FALSE(r.is_k_uniform);
  EXPECT_FALSE(r.warnings.empty());
  const UniformityReport bell = Check(CatalogState("bell"), 2);
  EXPECT_FALSE(bell.is_k_uniform);
  EXPECT_FALSE(bell.warnings.empty());
}

TEST(CheckUniformityTest, FloatModeOnExactState) {
  UniformityOptions options;
  options.k = 3;
  options.arithmetic = Arithmetic::kFloat;
  const UniformityReport r = CheckUniformity(CatalogState("psi11"), options);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.tolerance, kDefaultTolerance);
  EXPECT_TRUE(r.is_k_uniform);
  EXPECT_LT(r.max_deviation, 1e-14);
}

TEST(CheckUniformityTest, RejectsBadOptions) {
  std::mt19937_64 rng(1);
  const PureState generic = testing::RandomState(3, rng);
  UniformityOptions options;
  options.arithmetic = Arithmetic::kExact;
  EXPECT_THROW(CheckUniformity(generic, options), Error);
  options = {};
  options.k = 0;
  EXPECT_THROW(CheckUniformity(generic, options), Error);
  options.k = 4;
  EXPECT_THROW(CheckUniformity(generic, options), Error);
  options.k = 1;
  options.tolerance = -1;
  EXPECT_THROW(CheckUniformity(generic, options), Error);
}

TEST(PurityTableTest, BellSingles) {
  const auto rows = PurityTable(CatalogState("bell"), 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].subset.labels(), std::vector<int>{1});
  EXPECT_EQ(rows[0].purity.exact, Rational(1, 2));
  EXPECT_EQ(rows[1].purity.exact, Rational(1, 2));
}

TEST(PurityTableTest, ElevenQubitFourSubsets) {
  const auto rows = PurityTable(CatalogState("psi11"), 4, 2);
  ASSERT_EQ(rows.size(), 330u);
  std::vector<std::vector<int>> eighths;
  int sixteenths = 0;
  for (const auto& row : rows) {
    if (row.purity.exact == Rational(1, 16)) ++sixteenths;
    if (row.purity.exact == Rational(1, 8)) eighths.push_back(row.subset.labels());
  }
  EXPECT_EQ(sixteenths, 300);
  ASSERT_EQ(eighths.size(), 30u);
  EXPECT_EQ(eighths[0], (std::vector<int>{1, 2, 8, 11}));
  EXPECT_EQ(eighths[1], (std::vector<int>{1, 2, 9, 10}));
  EXPECT_EQ(eighths[2], (std::vector<int>{1, 3, 6, 11}));
}

TEST(PurityTableTest, SignedEightQubitTableHasSeventyRows) {
  const auto rows = PurityTable(CatalogState("psiM8"), 4);
  ASSERT_EQ(rows.size(), 70u);
  EXPECT_EQ(rows[0].subset.labels(), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(rows[0].purity.exact, Rational(21, 64));
}

TEST(ReportJsonTest, StableFieldOrderAndExactPurities) {
  const auto j = ReportToJson(Check(CatalogState("bell"), 1));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "n_qubits", "k", "mode",
                                            "tolerance", "is_k_uniform", "max_deviation",
                                            "verdicts", "witnesses", "warnings", "notes"}));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["verdicts"][0]["purity"]["num"], 1);
  EXPECT_EQ(j["verdicts"][0]["purity"]["den"], 2);
  EXPECT_EQ(j["verdicts"][0]["subset"], std::vector<int>{1});
}

TEST(UniformityPropertyTest, JsonIsIndependentOfThreadCount) {
  for (const char* id : {"psi11", "psiM8", "psi13"}) {
    const PureState psi = CatalogState(id);
    const std::string one = ReportToJson(Check(psi, 3, CheckMode::kAllSizes, 1)).dump();
    const std::string eight = ReportToJson(Check(psi, 3, CheckMode::kAllSizes, 8)).dump();
    EXPECT_EQ(one, eight) << id;
  }
}

TEST(UniformityPropertyTest, PassingImpliesLowerLevelsPass) {
  for (const auto& entry : CatalogEntries()) {
    const PureState psi = CatalogState(entry.id);
    for (int k = 1; k <= std::min(3, psi.n_qubits() / 2); ++k) {
      if (!Check(psi, k).is_k_uniform) continue;
      for (int m = 1; m < k; ++m) EXPECT_TRUE(Check(psi, m).is_k_uniform) << entry.id;
    }
  }
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState psi = testing::RandomSignedState(4, 4 << (trial % 2), rng);
    if (Check(psi, 2).is_k_uniform) EXPECT_TRUE(Check(psi, 1).is_k_uniform);
  }
}

TEST(UniformityPropertyTest, LargeSubsetsRespectSchmidtBound) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const PureState psi = testing::RandomState(n, rng, 0.5);
    for (int size = n / 2 + 1; size <= n; ++size) {
      for (const auto& s : Combinations(n, size)) {
        EXPECT_GE(ComputePurity(PartialTrace(psi, s)).value, std::ldexp(1.0, size - n) - 1e-12);
      }
    }
  }
}

TEST(ReportTextTest, MentionsVerdict) {
  const std::string text = ReportToText(Check(CatalogState("psi11"), 3));
  EXPECT_NE(text.find("3-uniform"), std::string::npos);
  EXPECT_NE(text.find("165/165"), std::string::npos);
}

}  // namespace
}  // namespace kuniform
