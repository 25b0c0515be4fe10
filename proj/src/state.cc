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

#include "kuniform/state.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kuniform/error.h"

namespace kuniform {
namespace {

constexpr double kExactDetectTolerance = 1e-12;

void SortAndCheckDuplicates(std::vector<PureState::Entry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != entries.end()) {
    throw Error(ErrorCode::kDuplicateBasisState,
                "basis index " + std::to_string(dup->first) + " listed twice");
  }
}

void CheckIndexRange(BasisIndex index, int n_qubits) {
  if (index >> n_qubits != 0) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(index) + " does not fit in " +
                    std::to_string(n_qubits) + " qubits");
  }
}

}  // namespace

BasisIndex BitstringToIndex(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<size_t>(kMaxQubits)) {
    throw Error(ErrorCode::kBadBitstring, "bitstring length out of range: '" + std::string(bits) + "'");
  }
  BasisIndex index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kBadBitstring, "not a bitstring: '" + std::string(bits) + "'");
    }
    index = (index << 1) | static_cast<BasisIndex>(c - '0');
  }
  return index;
}

std::string IndexToBitstring(BasisIndex index, int n_qubits) {
  std::string bits(n_qubits, '0');
  for (int i = 0; i < n_qubits; ++i) {
    if ((index >> (n_qubits - 1 - i)) & 1) bits[i] = '1';
  }
  return bits;
}

void CheckQubitCount(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw Error(ErrorCode::kInvalidArgument,
                "qubit count " + std::to_string(n_qubits) + " outside [1, 30]");
  }
}

QubitSubset QubitSubset::Create(std::vector<int> labels, int n_qubits) {
  std::sort(labels.begin(), labels.end());
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > n_qubits) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "qubit " + std::to_string(labels[i]) + " outside [1, " +
                      std::to_string(n_qubits) + "]");
    }
    if (i > 0 && labels[i] == labels[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "qubit " + std::to_string(labels[i]) + " repeated in subset");
    }
  }
  return QubitSubset(std::move(labels));
}

QubitSubset QubitSubset::Full(int n_qubits) {
  std::vector<int> labels(n_qubits);
  std::iota(labels.begin(), labels.end(), 1);
  return QubitSubset(std::move(labels));
}

bool QubitSubset::Contains(int label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

BasisIndex QubitSubset::Mask(int n_qubits) const {
  BasisIndex mask = 0;
  for (int q : labels_) mask |= QubitBit(q, n_qubits);
  return mask;
}

std::string QubitSubset::ToString() const {
  std::string out = "{";
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(labels_[i]);
  }
  return out + "}";
}

QubitSubset SubsetComplement(const QubitSubset& subset, int n_qubits) {
  std::vector<int> rest;
  for (int q = 1; q <= n_qubits; ++q) {
    if (!subset.Contains(q)) rest.push_back(q);
  }
  return QubitSubset::Create(std::move(rest), n_qubits);
}

std::vector<QubitSubset> Combinations(int n_qubits, int size) {
  std::vector<QubitSubset> out;
  if (size < 0 || size > n_qubits) return out;
  std::vector<int> current(size);
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(QubitSubset::Create(current, n_qubits));
    int i = size - 1;
    while (i >= 0 && current[i] == n_qubits - size + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < size; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

PureState PureState::FromAmplitudes(int n_qubits,
                                    std::vector<std::pair<BasisIndex, Complex>> amplitudes,
                                    bool normalize) {
  CheckQubitCount(n_qubits);
  std::vector<Entry> entries;
  entries.reserve(amplitudes.size());
  for (const auto& [index, value] : amplitudes) {
    CheckIndexRange(index, n_qubits);
    entries.push_back({index, Amplitude{value, std::nullopt}});
  }
  SortAndCheckDuplicates(entries);
  std::erase_if(entries, [](const Entry& e) { return std::abs(e.second.value) < kZeroThreshold; });

  double norm_sq = 0.0;
  for (const auto& e : entries) norm_sq += std::norm(e.second.value);
  if (normalize) {
    if (norm_sq == 0.0) throw Error(ErrorCode::kNotNormalized, "state has no nonzero amplitude");
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& e : entries) e.second.value *= inv;
    norm_sq = 1.0;
  }
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kNotNormalized,
                "sum of squared magnitudes is " + std::to_string(norm_sq));
  }

  // Equal magnitude 1/sqrt(r) with real +-1 phases: promote to exact form.
  const auto r = static_cast<int64_t>(entries.size());
  const double target = 1.0 / std::sqrt(static_cast<double>(r));
  bool uniform = std::all_of(entries.begin(), entries.end(), [&](const Entry& e) {
    return std::abs(e.second.value.imag()) < kExactDetectTolerance &&
           std::abs(std::abs(e.second.value.real()) - target) < kExactDetectTolerance;
  });
  if (!uniform) return PureState(n_qubits, std::move(entries), std::nullopt);

  std::vector<std::pair<BasisIndex, int64_t>> numerators;
  numerators.reserve(entries.size());
  for (const auto& e : entries) {
    numerators.emplace_back(e.first, e.second.value.real() > 0 ? 1 : -1);
  }
  return FromExact(n_qubits, std::move(numerators), r);
}

PureState PureState::FromExact(int n_qubits,
                               std::vector<std::pair<BasisIndex, int64_t>> numerators,
                               int64_t scale, bool normalize) {
  CheckQubitCount(n_qubits);
  std::erase_if(numerators, [](const auto& p) { return p.second == 0; });
  __int128 norm = 0;
  for (const auto& [index, c] : numerators) {
    CheckIndexRange(index, n_qubits);
    norm += static_cast<__int128>(c) * c;
  }
  if (norm == 0) throw Error(ErrorCode::kNotNormalized, "state has no nonzero amplitude");
  if (normalize) {
    if (norm > static_cast<__int128>(INT64_MAX)) {
      throw Error(ErrorCode::kInvalidArgument, "exact scale overflow");
    }
    scale = static_cast<int64_t>(norm);
  }
  if (scale <= 0 || norm != scale) {
    throw Error(ErrorCode::kNotNormalized,
                "sum of squared numerators " + std::to_string(static_cast<int64_t>(norm)) +
                    " differs from scale " + std::to_string(scale));
  }
  const double root = std::sqrt(static_cast<double>(scale));
  std::vector<Entry> entries;
  entries.reserve(numerators.size());
  for (const auto& [index, c] : numerators) {
    entries.push_back({index, Amplitude{Complex(static_cast<double>(c) / root, 0.0),
                                        ExactAmplitude{c, scale}}});
  }
  SortAndCheckDuplicates(entries);
  return PureState(n_qubits, std::move(entries), scale);
}

bool PureState::is_uniform_magnitude() const {
  return is_exact() && std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) {
           return e.second.exact->numerator == 1 || e.second.exact->numerator == -1;
         });
}

bool PureState::has_real_amplitudes() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second.value.imag() == 0.0; });
}

const Amplitude* PureState::Find(BasisIndex index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, BasisIndex i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return nullptr;
  return &it->second;
}

Complex PureState::AmplitudeAt(BasisIndex index) const {
  const Amplitude* a = Find(index);
  return a ? a->value : Complex(0.0, 0.0);
}

double PureState::NormSquared() const {
  double total = 0.0;
  for (const auto& e : entries_) total += std::norm(e.second.value);
  return total;
}

PureState MakeState(int n_qubits, const std::vector<BasisEntry>& entries, bool normalize) {
  CheckQubitCount(n_qubits);
  std::vector<std::pair<BasisIndex, Complex>> amplitudes;
  amplitudes.reserve(entries.size());
  for (const auto& e : entries) {
    if (static_cast<int>(e.bits.size()) != n_qubits) {
      throw Error(ErrorCode::kBadBitstring, "bitstring '" + e.bits + "' has length " +
                                                std::to_string(e.bits.size()) + ", expected " +
                                                std::to_string(n_qubits));
    }
    amplitudes.emplace_back(BitstringToIndex(e.bits), Complex(e.re, e.im));
  }
  return PureState::FromAmplitudes(n_qubits, std::move(amplitudes), normalize);
}

Complex InnerProduct(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner product of states on " +
                                                   std::to_string(a.n_qubits()) + " and " +
                                                   std::to_string(b.n_qubits()) + " qubits");
  }
  Complex total(0.0, 0.0);
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += std::conj(ia->second.value) * ib->second.value;
      ++ia;
      ++ib;
    }
  }
  return total;
}

std::optional<Rational> ExactInnerProduct(const PureState& a, const PureState& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner product of states on " +
                                                   std::to_string(a.n_qubits()) + " and " +
                                                   std::to_string(b.n_qubits()) + " qubits");
  }
  if (!a.is_exact() || !b.is_exact()) return std::nullopt;
  const __int128 product = static_cast<__int128>(a.exact_scale()) * b.exact_scale();
  auto root = static_cast<__int128>(std::llround(std::sqrt(static_cast<double>(product))));
  while (root * root > product) --root;
  while ((root + 1) * (root + 1) <= product) ++root;
  if (root * root != product || root > INT64_MAX) return std::nullopt;

  __int128 total = 0;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() && ib != b.entries().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += static_cast<__int128>(ia->second.exact->numerator) * ib->second.exact->numerator;
      ++ia;
      ++ib;
    }
  }
  return Rational(static_cast<int64_t>(total), static_cast<int64_t>(root));
}

}  // namespace kuniform
