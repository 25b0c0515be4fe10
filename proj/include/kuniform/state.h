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

#ifndef KUNIFORM_STATE_H_
#define KUNIFORM_STATE_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kuniform/rational.h"

namespace kuniform {

using BasisIndex = uint64_t;
using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 30;
inline constexpr double kZeroThreshold = 1e-14;
inline constexpr double kNormTolerance = 1e-10;

// Qubit labels are 1-based and qubit 1 is the most significant bit of a
// basis index: on n qubits, label q lives at bit (n - q).
inline BasisIndex QubitBit(int qubit, int n_qubits) {
  return BasisIndex{1} << (n_qubits - qubit);
}

// Parses a string of '0'/'1' characters; throws BadBitstring otherwise.
BasisIndex BitstringToIndex(std::string_view bits);
std::string IndexToBitstring(BasisIndex index, int n_qubits);

// Throws InvalidArgument unless 1 <= n <= kMaxQubits.
void CheckQubitCount(int n_qubits);

// Strictly increasing list of 1-based qubit labels.
class QubitSubset {
 public:
  QubitSubset() = default;

  // Validates labels against [1, n_qubits]; sorts and rejects duplicates.
  static QubitSubset Create(std::vector<int> labels, int n_qubits);
  static QubitSubset Full(int n_qubits);

  const std::vector<int>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  int operator[](int i) const { return labels_[i]; }

  bool Contains(int label) const;
  BasisIndex Mask(int n_qubits) const;
  std::string ToString() const;  // "{1,2,5}"

  friend auto operator<=>(const QubitSubset&, const QubitSubset&) = default;

 private:
  explicit QubitSubset(std::vector<int> labels) : labels_(std::move(labels)) {}

  std::vector<int> labels_;
};

QubitSubset SubsetComplement(const QubitSubset& subset, int n_qubits);

// All subsets of {1..n} with exactly `size` elements, lexicographic order.
std::vector<QubitSubset> Combinations(int n_qubits, int size);

// Amplitude numerator / sqrt(scale) with an integer numerator.
struct ExactAmplitude {
  int64_t numerator = 0;
  int64_t scale = 1;

  friend bool operator==(const ExactAmplitude&, const ExactAmplitude&) = default;
};

struct Amplitude {
  Complex value;
  std::optional<ExactAmplitude> exact;

  friend bool operator==(const Amplitude&, const Amplitude&) = default;
};

struct BasisEntry {
  std::string bits;
  double re = 0.0;
  double im = 0.0;
};

// Sparse, immutable, normalized N-qubit pure state. Entries are kept sorted
// by basis index and never hold a (near) zero amplitude.
//
// When every amplitude is an integer multiple of 1/sqrt(scale) the state
// carries an exact representation and all derived quantities (reduced
// density matrices, purities, correlations) can be computed as rationals.
class PureState {
 public:
  using Entry = std::pair<BasisIndex, Amplitude>;

  // Floating entries. Duplicate indices throw DuplicateBasisState. When
  // `normalize` is false the norm must be 1 within kNormTolerance.
  // Equal-magnitude real states with +-1 phases are promoted to exact form.
  static PureState FromAmplitudes(int n_qubits,
                                  std::vector<std::pair<BasisIndex, Complex>> amplitudes,
                                  bool normalize = false);

  // Exact entries numerator/sqrt(scale). Numerators that collide are not
  // allowed here (callers sum them first); zero numerators are dropped.
  // Without `normalize`, sum of squared numerators must equal `scale`.
  static PureState FromExact(int n_qubits,
                             std::vector<std::pair<BasisIndex, int64_t>> numerators,
                             int64_t scale, bool normalize = false);

  int n_qubits() const { return n_qubits_; }
  std::span<const Entry> entries() const { return entries_; }
  size_t support_size() const { return entries_.size(); }

  // True iff the exact representation is present.
  bool is_exact() const { return exact_scale_.has_value(); }
  int64_t exact_scale() const { return exact_scale_.value_or(0); }
  // Exact with every numerator equal to +-1: an equal superposition with
  // signs, sign/sqrt(support_size).
  bool is_uniform_magnitude() const;
  bool has_real_amplitudes() const;

  // nullptr when the index is outside the support.
  const Amplitude* Find(BasisIndex index) const;
  Complex AmplitudeAt(BasisIndex index) const;

  double NormSquared() const;

 private:
  PureState(int n_qubits, std::vector<Entry> entries, std::optional<int64_t> scale)
      : n_qubits_(n_qubits), entries_(std::move(entries)), exact_scale_(scale) {}

  int n_qubits_ = 0;
  std::vector<Entry> entries_;
  std::optional<int64_t> exact_scale_;
};

PureState MakeState(int n_qubits, const std::vector<BasisEntry>& entries,
                    bool normalize = false);

// <a|b>
Complex InnerProduct(const PureState& a, const PureState& b);

// <a|b> as a rational when both states are exact and the product of their
// scales is a perfect square; nullopt otherwise.
std::optional<Rational> ExactInnerProduct(const PureState& a, const PureState& b);

}  // namespace kuniform

#endif  // KUNIFORM_STATE_H_
