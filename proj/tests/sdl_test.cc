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
#include <map>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "kuniform/catalog.h"
#include "kuniform/error.h"
#include "kuniform/sdl.h"
#include "test_util.h"

namespace kuniform {
namespace {

constexpr char kBell[] = "state 2\nnorm 1/sqrt(2)\nterm: block(1,2){00 + 11}\n";

ErrorCode ParseError(const std::string& text) {
  try {
    Expand(ParseSdl(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::kInternalInconsistency;
}

TEST(SdlParseTest, BellDocument) {
  const SdlDocument doc = ParseSdl(kBell);
  EXPECT_EQ(doc.n_qubits, 2);
  EXPECT_EQ(doc.norm, (SdlCoefficient{1, 2}));
  ASSERT_EQ(doc.terms.size(), 1u);
  ASSERT_EQ(doc.terms[0].blocks.size(), 1u);
  EXPECT_EQ(doc.terms[0].blocks[0].kets.size(), 2u);
  const PureState bell = Expand(doc);
  EXPECT_EQ(bell.support_size(), 2u);
  EXPECT_NEAR(bell.AmplitudeAt(0).real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(bell.AmplitudeAt(3).real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(SdlParseTest, ElevenQubitDocumentStructure) {
  const SdlDocument doc = ParseSdl(CatalogGet("psi11").sdl);
  EXPECT_EQ(doc.n_qubits, 11);
  EXPECT_EQ(doc.norm, (SdlCoefficient{1, 32}));
  ASSERT_EQ(doc.terms.size(), 8u);
  for (const auto& term : doc.terms) {
    ASSERT_EQ(term.blocks.size(), 2u);
    EXPECT_EQ(term.blocks[0].kets.size(), 2u);
    EXPECT_EQ(term.blocks[1].kets.size(), 2u);
  }
  EXPECT_EQ(doc.terms[0].blocks[0].qubits, (std::vector<int>{3, 4, 6, 7}));
  EXPECT_EQ(doc.terms[0].blocks[1].qubits, (std::vector<int>{1, 2, 5, 8, 9, 10, 11}));
}

TEST(SdlParseTest, CommentsSignsAndCoefficients) {
  const SdlDocument doc = ParseSdl(
      "# header comment\n"
      "state 2   # two qubits\n"
      "norm 1/sqrt(6)\n"
      "term 2: block(1){0} * block(2){1}\n"
      "term -1/sqrt(2): block(2,1){-00 + 11}\n"
      "term -: block(1){1} * block(2){0}\n");
  ASSERT_EQ(doc.terms.size(), 3u);
  EXPECT_EQ(doc.terms[0].coefficient, (SdlCoefficient{2, 1}));
  EXPECT_EQ(doc.terms[1].coefficient.Value(), -1 / std::sqrt(2.0));
  EXPECT_EQ(doc.terms[1].blocks[0].kets[0], (SdlKet{-1, "00"}));
  EXPECT_LT(doc.terms[2].coefficient.Value(), 0);
  EXPECT_EQ(doc.terms[1].line, 5);
}

TEST(SdlParseTest, SyntaxErrorsCarryPosition) {
  try {
    ParseSdl("state 2\nnorm 1/sqrt(2)\nterm: block(1,2){00 + 11\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
  try {
    ParseSdl("state 2\nnorm 1/sqrt(2)\nterm: blok(1,2){00}\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 7);
  }
  EXPECT_EQ(ParseError("norm 1\nterm: block(1){0}\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(ParseError("state 1\nnorm 1\n"), ErrorCode::kSyntaxError);
  EXPECT_EQ(ParseError("state 1\nnorm 1\nterm: block(1){2}\n"), ErrorCode::kSyntaxError);
}

TEST(SdlParseTest, CoverageAndWidthErrors) {
  EXPECT_EQ(ParseError("state 2\nnorm 1\nterm: block(1,2){00} * block(1,2){00}\n"),
            ErrorCode::kQubitCoverageError);
  EXPECT_EQ(ParseError("state 3\nnorm 1\nterm: block(1,2){00}\n"),
            ErrorCode::kQubitCoverageError);
  EXPECT_EQ(ParseError("state 2\nnorm 1\nterm: block(1,3){00}\n"),
            ErrorCode::kQubitCoverageError);
  EXPECT_EQ(ParseError("state 2\nnorm 1\nterm: block(1,2){00 + 1}\n"),
            ErrorCode::kBlockWidthMismatch);
}

TEST(SdlExpandTest, CancellationIsNotSilentlyRepaired) {
  const std::string text =
      "state 2\nnorm 1/sqrt(2)\nterm: block(1,2){00}\nterm -: block(1,2){00}\n";
  EXPECT_EQ(ParseError(text), ErrorCode::kNotNormalized);
  const SdlExpansion expansion = ExpandTerms(ParseSdl(text));
  ASSERT_TRUE(expansion.numerators.has_value());
  EXPECT_EQ(expansion.numerators->at(0), 0);
}

TEST(SdlExpandTest, CollisionsAdd) {
  const PureState psi = Expand(ParseSdl(
      "state 2\nnorm 1/sqrt(6)\nterm: block(1,2){00 + 11}\nterm: block(1,2){00 + 01}\n"));
  EXPECT_TRUE(psi.is_exact());
  EXPECT_EQ(psi.exact_scale(), 6);
  EXPECT_EQ(psi.Find(0)->exact->numerator, 2);
  EXPECT_EQ(psi.Find(1)->exact->numerator, 1);
}

TEST(SdlExpandTest, NormalizeIsOptIn) {
  const std::string text = "state 1\nnorm 1\nterm: block(1){0 + 1}\n";
  EXPECT_EQ(ParseError(text), ErrorCode::kNotNormalized);
  const PureState psi = Expand(ParseSdl(text), true);
  EXPECT_NEAR(psi.NormSquared(), 1.0, 1e-15);
}

TEST(SdlExpandTest, CatalogElevenToFifteenHaveThirtyTwoPositiveTerms) {
  for (const char* id : {"psi11", "psi12", "psi13", "psi14", "psi15"}) {
    const PureState psi = CatalogState(id);
    EXPECT_EQ(psi.support_size(), 32u) << id;
    EXPECT_TRUE(psi.is_exact()) << id;
    EXPECT_EQ(psi.exact_scale(), 32) << id;
    for (const auto& [index, amp] : psi.entries()) {
      EXPECT_EQ(amp.exact->numerator, 1) << id;
      EXPECT_NEAR(amp.value.real(), 1 / std::sqrt(32.0), 1e-15);
    }
  }
}

TEST(SdlExpandTest, SignedEightQubitExpansionMatchesOracle) {
  const PureState psi = CatalogState("psiM8");
  EXPECT_EQ(psi.support_size(), 52u);
  EXPECT_EQ(psi.exact_scale(), 64);
  std::map<int64_t, int> histogram;
  for (const auto& [index, amp] : psi.entries()) ++histogram[amp.exact->numerator];
  EXPECT_EQ(histogram, (std::map<int64_t, int>{{-2, 2}, {-1, 20}, {1, 28}, {2, 2}}));
  const std::vector<std::pair<std::string, int64_t>> first = {
      {"00000000", 2}, {"00000001", 1},  {"00001001", 1},
      {"00001011", -1}, {"00001110", -2}, {"00001111", -1}};
  for (size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(IndexToBitstring(psi.entries()[i].first, 8), first[i].first);
    EXPECT_EQ(psi.entries()[i].second.exact->numerator, first[i].second);
  }
}

std::string RandomDocument(std::mt19937_64& rng, int n, int terms) {
  std::string text = "state " + std::to_string(n) + "\nnorm 1\n";
  for (int t = 0; t < terms; ++t) {
    std::vector<int> labels(n);
    for (int q = 0; q < n; ++q) labels[q] = q + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    text += (rng() & 1) ? "term -:" : "term:";
    size_t pos = 0;
    while (pos < labels.size()) {
      const size_t width = 1 + rng() % (labels.size() - pos);
      if (pos > 0) text += " *";
      text += " block(";
      for (size_t j = 0; j < width; ++j) text += (j ? "," : "") + std::to_string(labels[pos + j]);
      text += "){";
      const int kets = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < kets; ++k) {
        text += k == 0 ? "" : ((rng() & 1) ? " - " : " + ");
        for (size_t j = 0; j < width; ++j) text += (rng() & 1) ? '1' : '0';
      }
      text += "}";
      pos += width;
    }
    text += "\n";
  }
  return text;
}

TEST(SdlPropertyTest, ExpansionIsLinearInTerms) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const SdlDocument all = ParseSdl(RandomDocument(rng, n, 2 + static_cast<int>(rng() % 4)));
    const size_t split = 1 + rng() % (all.terms.size() - 1);
    SdlDocument left = all, right = all;
    left.terms.assign(all.terms.begin(), all.terms.begin() + split);
    right.terms.assign(all.terms.begin() + split, all.terms.end());
    const auto whole = *ExpandTerms(all).numerators;
    auto sum = *ExpandTerms(left).numerators;
    const auto tail = *ExpandTerms(right).numerators;
    for (const auto& [index, c] : tail) sum[index] += c;
    for (BasisIndex i = 0; i < (BasisIndex{1} << n); ++i) {
      const int64_t a = whole.count(i) ? whole.at(i) : 0;
      const int64_t b = sum.count(i) ? sum.at(i) : 0;
      ASSERT_EQ(a, b);
    }
  }
}

TEST(SdlPropertyTest, RelabelingBlockColumnsPreservesExpansion) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const SdlDocument doc = ParseSdl(RandomDocument(rng, n, 1 + static_cast<int>(rng() % 3)));
    SdlDocument shuffled = doc;
    for (auto& term : shuffled.terms) {
      for (auto& block : term.blocks) {
        std::vector<size_t> perm(block.qubits.size());
        for (size_t j = 0; j < perm.size(); ++j) perm[j] = j;
        std::shuffle(perm.begin(), perm.end(), rng);
        SdlBlock permuted = block;
        for (size_t j = 0; j < perm.size(); ++j) {
          permuted.qubits[j] = block.qubits[perm[j]];
          for (size_t k = 0; k < block.kets.size(); ++k) {
            permuted.kets[k].bits[j] = block.kets[k].bits[perm[j]];
          }
        }
        block = permuted;
      }
    }
    EXPECT_EQ(*ExpandTerms(doc).numerators, *ExpandTerms(shuffled).numerators);
  }
}

TEST(SdlPropertyTest, WriterRoundTrip) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const PureState psi = testing::RandomSignedState(5, 1 + static_cast<int>(rng() % 32), rng);
    const PureState back = Expand(ParseSdl(StateToSdl(psi)));
    ASSERT_EQ(back.support_size(), psi.support_size());
    for (size_t i = 0; i < psi.support_size(); ++i) {
      EXPECT_EQ(back.entries()[i].first, psi.entries()[i].first);
      EXPECT_EQ(back.entries()[i].second.exact, psi.entries()[i].second.exact);
    }
  }
  const PureState m8 = CatalogState("psiM8");
  const PureState back = Expand(ParseSdl(StateToSdl(m8)));
  for (size_t i = 0; i < m8.support_size(); ++i) {
    EXPECT_EQ(back.entries()[i].second.exact, m8.entries()[i].second.exact);
  }
}

}  // namespace
}  // namespace kuniform
