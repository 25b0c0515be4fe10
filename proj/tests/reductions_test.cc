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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "kuniform/catalog.h"
#include "kuniform/error.h"
#include "kuniform/reductions.h"
#include "test_util.h"

namespace kuniform {
namespace {

PureState Bell() { return CatalogState("bell"); }

TEST(PartialTraceTest, BellMarginalIsMaximallyMixed) {
  const DensityMatrix rho = PartialTrace(Bell(), QubitSubset::Create({1}, 2));
  ASSERT_EQ(rho.dim, 2);
  EXPECT_NEAR(rho.At(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho.At(1, 1).real(), 0.5, 1e-15);
  EXPECT_EQ(rho.At(0, 1), Complex(0.0));
  ASSERT_TRUE(rho.exact.has_value());
  EXPECT_EQ(rho.exact->scale, 2);
  EXPECT_EQ(rho.CountAt(0, 0), 1);
  EXPECT_EQ(rho.CountAt(1, 1), 1);
  const Purity p = ComputePurity(rho);
  EXPECT_EQ(p.exact, Rational(1, 2));
}

TEST(PartialTraceTest, ProductStateMarginalIsPure) {
  const PureState zero = MakeState(2, {{"00", 1, 0}});
  const DensityMatrix rho = PartialTrace(zero, QubitSubset::Create({1}, 2));
  EXPECT_EQ(rho.At(0, 0), Complex(1.0));
  EXPECT_EQ(rho.At(1, 1), Complex(0.0));
  EXPECT_EQ(ComputePurity(rho).exact, Rational(1));
}

TEST(PartialTraceTest, KeptQubitsFollowLabelOrder) {
  // |01>: qubit 1 is 0, qubit 2 is 1.
  const PureState psi = MakeState(2, {{"01", 1, 0}});
  EXPECT_EQ(PartialTrace(psi, QubitSubset::Create({2}, 2)).At(1, 1), Complex(1.0));
  EXPECT_EQ(PartialTrace(psi, QubitSubset::Create({1}, 2)).At(0, 0), Complex(1.0));
  const PureState three = MakeState(3, {{"110", 1, 0}});
  const DensityMatrix rho = PartialTrace(three, QubitSubset::Create({3, 1}, 3));
  EXPECT_EQ(rho.At(2, 2), Complex(1.0));  // local "10": qubit 1 high, qubit 3 low
}

TEST(PartialTraceTest, ElevenQubitTripleIsIdentityOverEight) {
  const DensityMatrix rho = PartialTrace(CatalogState("psi11"), QubitSubset::Create({1, 2, 3}, 11));
  ASSERT_EQ(rho.dim, 8);
  ASSERT_TRUE(rho.exact.has_value());
  EXPECT_EQ(rho.exact->scale, 32);
  int64_t trace = 0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) EXPECT_EQ(rho.CountAt(a, b), a == b ? 4 : 0);
    trace += rho.CountAt(a, a);
  }
  EXPECT_EQ(trace, 32);
  const Purity p = ComputePurity(rho);
  EXPECT_EQ(p.exact, Rational(128, 1024));
}

TEST(PartialTraceTest, Limits) {
  const PureState psi = MakeState(13, {{std::string(13, '0'), 1, 0}});
  std::vector<int> labels(13);
  for (int i = 0; i < 13; ++i) labels[i] = i + 1;
  try {
    PartialTrace(psi, QubitSubset::Create(labels, 13));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSubsetTooLarge);
  }
  try {
    PartialTrace(Bell(), QubitSubset::Create({3}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
  const DensityMatrix scalar = PartialTrace(Bell(), QubitSubset());
  EXPECT_EQ(scalar.dim, 1);
  EXPECT_NEAR(scalar.At(0, 0).real(), 1.0, 1e-15);
}

TEST(PurityTest, PureProjectorHasUnitPurity) {
  std::mt19937_64 rng(3);
  const PureState psi = testing::RandomState(4, rng);
  EXPECT_NEAR(ComputePurity(PartialTrace(psi, QubitSubset::Full(4))).value, 1.0, 1e-12);
}

TEST(ReductionPropertyTest, MatchesDenseOracle) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const PureState psi = testing::RandomState(n, rng, 0.3 + 0.7 * (trial % 3) / 2.0);
    const auto dense = testing::ToDense(psi);
    for (int size = 1; size <= n; ++size) {
      for (const auto& keep : Combinations(n, size)) {
        const DensityMatrix rho = PartialTrace(psi, keep);
        const auto oracle = testing::DenseReduce(dense, n, keep.labels());
        for (int a = 0; a < rho.dim; ++a) {
          for (int b = 0; b < rho.dim; ++b) {
            ASSERT_LT(std::abs(rho.At(a, b) - oracle[a * rho.dim + b]), 1e-12);
          }
        }
      }
    }
  }
}

TEST(ReductionPropertyTest, HermitianUnitTraceBoundedPurity) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const PureState psi = testing::RandomState(n, rng, 0.5);
    for (const auto& keep : Combinations(n, 1 + static_cast<int>(rng() % n))) {
      const DensityMatrix rho = PartialTrace(psi, keep);
      Complex trace = 0;
      for (int a = 0; a < rho.dim; ++a) {
        trace += rho.At(a, a);
        for (int b = 0; b < rho.dim; ++b) {
          EXPECT_LT(std::abs(rho.At(a, b) - std::conj(rho.At(b, a))), 1e-12);
        }
      }
      EXPECT_NEAR(trace.real(), 1.0, 1e-12);
      const double p = ComputePurity(rho).value;
      EXPECT_GE(p, std::ldexp(1.0, -keep.size()) - 1e-12);
      EXPECT_LE(p, 1.0 + 1e-12);
    }
  }
}

TEST(ReductionPropertyTest, ComplementHasEqualPurity) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const PureState psi = testing::RandomState(n, rng, 0.4);
    for (int size = 1; size < n; ++size) {
      for (const auto& keep : Combinations(n, size)) {
        const double a = ComputePurity(PartialTrace(psi, keep)).value;
        const double b = ComputePurity(PartialTrace(psi, SubsetComplement(keep, n))).value;
        ASSERT_NEAR(a, b, 1e-10);
      }
    }
  }
}

TEST(ReductionPropertyTest, ExactAndFloatPuritiesAgree) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const PureState psi = testing::RandomSignedState(n, 1 + static_cast<int>(rng() % (1 << n)), rng);
    for (const auto& keep : Combinations(n, 1 + static_cast<int>(rng() % n))) {
      const Purity p = ComputePurity(PartialTrace(psi, keep));
      ASSERT_TRUE(p.exact.has_value());
      EXPECT_LT(std::abs(p.value - p.exact->ToDouble()), 1e-12);
    }
  }
}

bool IsExactlyMaximallyMixed(const DensityMatrix& rho) {
  if (rho.exact->scale % rho.dim != 0) return false;
  for (int a = 0; a < rho.dim; ++a) {
    for (int b = 0; b < rho.dim; ++b) {
      if (rho.CountAt(a, b) != (a == b ? rho.exact->scale / rho.dim : 0)) return false;
    }
  }
  return true;
}

TEST(ReductionPropertyTest, MaximallyMixedIsInheritedBySubsets) {
  std::vector<PureState> states;
  for (const char* id : {"psi11", "psi12", "psi13", "ghz3", "bell"}) {
    states.push_back(CatalogState(id));
  }
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 60; ++trial) {
    states.push_back(testing::RandomSignedState(4, 4 << (trial % 3), rng));
  }
  int mixed_found = 0;
  for (const PureState& psi : states) {
    const int n = psi.n_qubits();
    for (int size = 2; size <= std::min(3, n); ++size) {
      for (const auto& keep : Combinations(n, size)) {
        if (!IsExactlyMaximallyMixed(PartialTrace(psi, keep))) continue;
        ++mixed_found;
        for (int sub = 1; sub < size; ++sub) {
          for (const auto& pick : Combinations(size, sub)) {
            std::vector<int> labels;
            for (int i : pick) labels.push_back(keep[i - 1]);
            ASSERT_TRUE(IsExactlyMaximallyMixed(PartialTrace(psi, QubitSubset::Create(labels, n))));
          }
        }
      }
    }
  }
  EXPECT_GT(mixed_found, 100);
}

}  // namespace
}  // namespace kuniform
