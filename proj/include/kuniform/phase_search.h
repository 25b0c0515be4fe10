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

#ifndef KUNIFORM_PHASE_SEARCH_H_
#define KUNIFORM_PHASE_SEARCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "kuniform/oa.h"

namespace kuniform {

inline constexpr int kMaxSearchK = 4;
inline constexpr int kDefaultExhaustiveBits = 20;

// Total invariant mass sum_{1 <= |T| <= k} F_T of the signed equal
// superposition over a fixed support, as a function of the signs.
//
// With real amplitudes +-1/sqrt(r), each Pauli expectation is an integer
// over r: strings with an odd number of Y letters vanish, Z-only strings do
// not depend on the signs, and every other string is a sum of
// eps * s_i * s_j over row pairs related by its flip mask. The objective is
// kept as the integer numerator of value * r^2 so that "zero" is exact.
class SignObjective {
 public:
  // Requires 1 <= k <= min(kMaxSearchK, N).
  SignObjective(const OrthogonalArray& array, int k);

  int runs() const { return runs_; }
  int64_t Numerator(const std::vector<int>& signs) const;
  double ToValue(int64_t numerator) const;

  // Incremental evaluation for single-sign flips.
  class Walker {
   public:
    Walker(const SignObjective& objective, std::vector<int> signs);

    int64_t numerator() const { return numerator_; }
    const std::vector<int>& signs() const { return signs_; }
    // Numerator after flipping sign `row`, without applying it.
    int64_t NumeratorAfterFlip(int row) const;
    void Flip(int row);

   private:
    const SignObjective* objective_;
    std::vector<int> signs_;
    std::vector<int64_t> expectations_;
    int64_t numerator_ = 0;
    mutable std::vector<int64_t> delta_;
    mutable std::vector<int> touched_;
  };

 private:
  struct PairTerm {
    int string_id;
    int first;
    int second;
    int eps;
  };

  int runs_ = 0;
  int64_t constant_ = 0;
  int string_count_ = 0;
  std::vector<PairTerm> terms_;
  // For each row, indices into terms_ of the terms that involve it.
  std::vector<std::vector<int>> incidence_;
};

// Objective value for explicit signs (any global sign accepted).
double Objective(const OrthogonalArray& array, const SignVector& signs, int k);

enum class SearchMethod { kExhaustive, kLocal };

struct SearchOutcome {
  SignVector best_signs;
  double objective = 0.0;
  int64_t objective_numerator = 0;  // objective * r^2
  bool achieved_k_uniform = false;
  int64_t evaluations = 0;
  SearchMethod method = SearchMethod::kLocal;
  // True only for exhaustive runs: best_signs is a global minimum.
  bool certificate = false;
  // Objective values along the winning descent (local search only).
  std::vector<double> trajectory;
};

// All 2^(r-1) canonical sign vectors, walked in Gray-code order. Ties go to
// the earliest vector in that order. Throws SupportTooLarge when
// r - 1 > max_bits.
SearchOutcome SearchExhaustive(const OrthogonalArray& array, int k,
                               int max_bits = kDefaultExhaustiveBits, int threads = 1);

// Steepest single-flip descent from the all-plus vector (restart 0) and from
// seeded random canonical vectors. Ties are broken by the lowest row index;
// the run stops at the first restart that reaches zero.
SearchOutcome SearchLocal(const OrthogonalArray& array, int k, int restarts, uint64_t seed);

nlohmann::ordered_json SearchOutcomeToJson(const SearchOutcome& outcome);

}  // namespace kuniform

#endif  // KUNIFORM_PHASE_SEARCH_H_
