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

#ifndef KUNIFORM_INVARIANTS_H_
#define KUNIFORM_INVARIANTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kuniform/rational.h"
#include "kuniform/reductions.h"
#include "kuniform/state.h"

namespace kuniform {

inline constexpr int kMaxInvariantSubset = 6;

// Tensor product of single-qubit Paulis, one letter of "IXYZ" per qubit;
// letter i acts on qubit i+1.
class PauliString {
 public:
  static PauliString FromLetters(std::string_view letters);
  // Letters for the qubits of `subset` (in label order), identity elsewhere.
  static PauliString OnSubset(int n_qubits, const QubitSubset& subset, std::string_view letters);

  int n_qubits() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  QubitSubset Support() const;

  // Qubits carrying X or Y: the bits flipped by the operator.
  BasisIndex flip_mask() const { return flip_mask_; }
  // Qubits carrying Z or Y: the bits contributing a (-1)^bit phase.
  BasisIndex phase_mask() const { return phase_mask_; }
  int y_count() const { return y_count_; }

 private:
  std::string letters_;
  BasisIndex flip_mask_ = 0;
  BasisIndex phase_mask_ = 0;
  int y_count_ = 0;
};

// <psi|P|psi>. The imaginary residue must be below 1e-10 (NonHermitianResidue
// otherwise) and is discarded.
double PauliExpectation(const PureState& psi, const PauliString& p);

// Same quantity as a rational, for exact states.
std::optional<Rational> ExactPauliExpectation(const PureState& psi, const PauliString& p);

// Sum of squared expectations over the 3^|T| strings whose non-identity
// support is exactly T.
struct FValue {
  QubitSubset subset;
  double value = 0.0;
  std::optional<Rational> exact;
};

// Throws SubsetTooLarge above kMaxInvariantSubset, InvalidArgument for an
// empty subset.
FValue ComputeFValue(const PureState& psi, const QubitSubset& subset);

// 2^-|S| (1 + sum over non-empty T subset of S of F_T). For |S| = 1, 2, 3 this
// is the familiar single/pair/triple purity identity.
Purity PurityViaInvariants(const PureState& psi, const QubitSubset& subset);

// F-values of every subset up to `max_size`, computed once and shared by
// purity reconstructions of many subsets.
class FTable {
 public:
  FTable(const PureState& psi, int max_size, int threads = 1);

  int max_size() const { return max_size_; }
  const FValue& Get(const QubitSubset& subset) const;
  Purity PurityOf(const QubitSubset& subset) const;

 private:
  int n_qubits_;
  int max_size_;
  bool exact_;
  std::vector<FValue> values_;
  std::unordered_map<BasisIndex, size_t> by_mask_;
};

}  // namespace kuniform

#endif  // KUNIFORM_INVARIANTS_H_
