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

#ifndef KUNIFORM_OA_H_
#define KUNIFORM_OA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kuniform/state.h"

namespace kuniform {

// One +1/-1 per row of an array. Canonical when the first entry is +1.
struct SignVector {
  std::vector<int> signs;

  static SignVector AllPlus(size_t length) { return {std::vector<int>(length, 1)}; }
  // Line of '+'/'-' characters.
  static SignVector Parse(std::string_view text);

  size_t size() const { return signs.size(); }
  bool IsCanonical() const { return !signs.empty() && signs.front() == 1; }
  SignVector Canonical() const;
  std::string ToString() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
};

// Binary r x N array with pairwise distinct rows. Each row is one word;
// column c (1-based) is bit (N - c), the same convention as basis indices.
class OrthogonalArray {
 public:
  // Throws DuplicateRow, IndexOutOfRange for a row wider than `factors`.
  static OrthogonalArray Create(int factors, std::vector<BasisIndex> rows);
  static OrthogonalArray FromBitstrings(const std::vector<std::string>& rows);

  int runs() const { return static_cast<int>(rows_.size()); }
  int factors() const { return factors_; }
  const std::vector<BasisIndex>& rows() const { return rows_; }
  bool Entry(int row, int column) const { return (rows_[row] >> (factors_ - column)) & 1; }
  std::string RowString(int row) const { return IndexToBitstring(rows_[row], factors_); }

  // Same rows in ascending order.
  OrthogonalArray Sorted() const;

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;

 private:
  OrthogonalArray(int factors, std::vector<BasisIndex> rows)
      : factors_(factors), rows_(std::move(rows)) {}

  int factors_ = 0;
  std::vector<BasisIndex> rows_;
};

struct StrengthWitness {
  QubitSubset columns;
  // Pattern over `columns`, first column most significant.
  BasisIndex pattern = 0;
  int64_t observed = 0;
  double expected = 0.0;
};

struct StrengthResult {
  int strength = 0;
  // First under-represented pattern at size strength + 1; present whenever
  // strength < t_max.
  std::optional<StrengthWitness> witness;
};

// Exhaustive pattern counting over every column subset up to t_max.
// Requires t_max <= N and 2^t_max <= r (InvalidArgument otherwise).
StrengthResult OaStrength(const OrthogonalArray& array, int t_max);

struct IrredundancyWitness {
  QubitSubset dropped;
  int first_row = 0;  // 0-based row indices, first_row < second_row
  int second_row = 0;
};

struct IrredundancyResult {
  bool irredundant = true;
  std::optional<IrredundancyWitness> witness;
};

// Rows stay pairwise distinct after deleting any k columns. Requires k < N.
IrredundancyResult OaIrredundant(const OrthogonalArray& array, int k);

// (1/sqrt(r)) sum_j signs[j] |row_j>, always exact.
PureState StateFromOa(const OrthogonalArray& array,
                      const std::optional<SignVector>& signs = std::nullopt);

struct SignedArray {
  OrthogonalArray array;
  SignVector signs;
};

// Inverse of StateFromOa with rows in ascending order. Throws
// NotUniformMagnitude unless every amplitude is +-1/sqrt(r).
SignedArray OaFromState(const PureState& psi);

// Support rows of any state, ascending; magnitudes are ignored.
OrthogonalArray SupportArray(const PureState& psi);

// Closed under XOR (and therefore containing the zero row).
bool IsLinear(const OrthogonalArray& array);
// Minimum weight of a nonzero vector orthogonal to every row, by exhaustive
// enumeration of all 2^N vectors; N + 1 when no such vector exists.
int DualMinimumDistance(const OrthogonalArray& array);

// Text format: optional header "oa r N 2 t", then r rows of N 0/1
// characters, contiguous or space separated. '#' starts a comment.
OrthogonalArray ParseOa(std::string_view text);
std::string WriteOa(const OrthogonalArray& array, int strength);

nlohmann::ordered_json StrengthToJson(const StrengthResult& result);
nlohmann::ordered_json IrredundancyToJson(int k, const IrredundancyResult& result,
                                          const OrthogonalArray& array);

}  // namespace kuniform

#endif  // KUNIFORM_OA_H_
