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

#ifndef KUNIFORM_REDUCTIONS_H_
#define KUNIFORM_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kuniform/rational.h"
#include "kuniform/state.h"

namespace kuniform {

inline constexpr int kMaxReducedQubits = 12;

// entries = counts / scale, for states with an exact representation.
struct ExactDensity {
  std::vector<int64_t> counts;
  int64_t scale = 1;
};

// Reduced density matrix on `subset`, row-major. Local basis index bit
// (m - 1 - i) holds the i-th kept qubit, so the smallest kept label is the
// most significant bit, as in the global convention.
struct DensityMatrix {
  QubitSubset subset;
  int dim = 1;
  std::vector<Complex> entries;
  std::optional<ExactDensity> exact;

  Complex At(int row, int col) const { return entries[static_cast<size_t>(row) * dim + col]; }
  int64_t CountAt(int row, int col) const {
    return exact->counts[static_cast<size_t>(row) * dim + col];
  }
};

struct Purity {
  double value = 0.0;
  std::optional<Rational> exact;
};

// rho_S[a][b] = sum_e psi[a (x) e] conj(psi[b (x) e]). Works on the sparse
// support grouped by environment bits; never touches the 2^N dense space.
// Throws SubsetTooLarge beyond kMaxReducedQubits, IndexOutOfRange for a
// label above psi.n_qubits().
DensityMatrix PartialTrace(const PureState& psi, const QubitSubset& keep);

// Tr rho^2 = sum |rho_ab|^2, with an exact rational when rho is exact.
Purity ComputePurity(const DensityMatrix& rho);

}  // namespace kuniform

#endif  // KUNIFORM_REDUCTIONS_H_
