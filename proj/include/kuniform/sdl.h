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

#ifndef KUNIFORM_SDL_H_
#define KUNIFORM_SDL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kuniform/state.h"

namespace kuniform {

// State description language. A document writes a superposition as a sum
// of tensor products of small blocks, each block naming its qubits:
//
//   state 2
//   norm 1/sqrt(2)
//   term: block(1,2){00 + 11}
//
// Grammar (line oriented, '#' starts a comment):
//
//   doc   := "state" INT NL "norm" COEF NL term+
//   term  := "term" [SIGN] [COEF] ":" block ("*" block)* NL
//   block := "block(" INT ("," INT)* ")" "{" ket (("+"|"-") ket)* "}"
//   ket   := [SIGN] BITSTRING
//   COEF  := INT "/sqrt(" INT ")" | INT

// numerator / sqrt(radicand)
struct SdlCoefficient {
  int64_t numerator = 1;
  int64_t radicand = 1;

  double Value() const;
  friend bool operator==(const SdlCoefficient&, const SdlCoefficient&) = default;
};

struct SdlKet {
  int sign = 1;
  std::string bits;

  friend bool operator==(const SdlKet&, const SdlKet&) = default;
};

struct SdlBlock {
  // Labels in the order written; bit j of every ket binds to qubits[j].
  std::vector<int> qubits;
  std::vector<SdlKet> kets;

  friend bool operator==(const SdlBlock&, const SdlBlock&) = default;
};

struct SdlTerm {
  SdlCoefficient coefficient;
  std::vector<SdlBlock> blocks;
  int line = 0;

  friend bool operator==(const SdlTerm&, const SdlTerm&) = default;
};

struct SdlDocument {
  int n_qubits = 0;
  SdlCoefficient norm;
  std::vector<SdlTerm> terms;
};

// Throws SyntaxError (with line and column), QubitCoverageError when a term's
// blocks overlap or miss a qubit, BlockWidthMismatch when a ket's length
// differs from its block's qubit count.
SdlDocument ParseSdl(std::string_view text);

// Distributed, collision-summed amplitudes of a document, before any
// normalization check. `numerators`/`scale` are present when every term
// coefficient can be brought to a common radicand.
struct SdlExpansion {
  int n_qubits = 0;
  std::map<BasisIndex, double> amplitudes;
  std::optional<std::map<BasisIndex, int64_t>> numerators;
  int64_t scale = 0;
};

SdlExpansion ExpandTerms(const SdlDocument& doc);

// Expands and validates. Without `normalize`, a norm defect throws
// NotNormalized; it is never silently repaired.
PureState Expand(const SdlDocument& doc, bool normalize = false);

// One term per support entry over all qubits. Requires an exact state.
std::string StateToSdl(const PureState& psi);

// True when the first meaningful token of `text` is "state".
bool LooksLikeSdl(std::string_view text);

}  // namespace kuniform

#endif  // KUNIFORM_SDL_H_
