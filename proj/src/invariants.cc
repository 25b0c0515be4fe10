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

#include "kuniform/invariants.h"

#include <bit>
#include <cmath>

#include "kuniform/error.h"
#include "kuniform/parallel.h"

namespace kuniform {
namespace {

constexpr double kHermitianResidue = 1e-10;

int ParitySign(BasisIndex bits) { return std::popcount(bits) & 1 ? -1 : 1; }

// i^k for k mod 4 applied to a complex number.
Complex TimesIPower(Complex z, int k) {
  switch (k & 3) {
    case 1: return {-z.imag(), z.real()};
    case 2: return -z;
    case 3: return {z.imag(), -z.real()};
    default: return z;
  }
}

void CheckResidue(double imag, const std::string& what) {
  if (std::abs(imag) >= kHermitianResidue) {
    throw Error(ErrorCode::kNonHermitianResidue,
                what + " has imaginary part " + std::to_string(imag));
  }
}

QubitSubset SubsetFromMask(BasisIndex mask, int n_qubits) {
  std::vector<int> labels;
  for (int q = 1; q <= n_qubits; ++q) {
    if (mask & QubitBit(q, n_qubits)) labels.push_back(q);
  }
  return QubitSubset::Create(std::move(labels), n_qubits);
}

void CheckSubset(const PureState& psi, const QubitSubset& subset) {
  if (subset.empty()) throw Error(ErrorCode::kInvalidArgument, "F-value of the empty subset");
  if (subset.size() > kMaxInvariantSubset) {
    throw Error(ErrorCode::kSubsetTooLarge, "subset " + subset.ToString() + " exceeds " +
                                                std::to_string(kMaxInvariantSubset) + " qubits");
  }
  if (subset.labels().back() > psi.n_qubits()) {
    throw Error(ErrorCode::kIndexOutOfRange, "subset " + subset.ToString() + " on a " +
                                                 std::to_string(psi.n_qubits()) + "-qubit state");
  }
}

struct CorrelationTerm {
  BasisIndex index;
  Complex weight;
  int64_t exact_weight;
};

// Strings with support exactly T are grouped by their flip set F (the X/Y
// positions). Each group shares the products conj(psi[x^F]) psi[x]; within
// a group, Y-vs-X choices and the Z positions on T \ F only change phases.
FValue FValueImpl(const PureState& psi, const QubitSubset& subset) {
  const int n = psi.n_qubits();
  const int t = subset.size();
  std::vector<BasisIndex> bits(t);
  for (int i = 0; i < t; ++i) bits[i] = QubitBit(subset[i], n);
  auto mask_of = [&](unsigned sel) {
    BasisIndex m = 0;
    for (int i = 0; i < t; ++i) {
      if (sel & (1u << i)) m |= bits[i];
    }
    return m;
  };

  const bool exact = psi.is_exact();
  double total = 0.0;
  __int128 exact_total = 0;
  std::vector<CorrelationTerm> terms;
  const unsigned all = (1u << t) - 1;
  for (unsigned flip_sel = 0; flip_sel <= all; ++flip_sel) {
    const BasisIndex flip = mask_of(flip_sel);
    terms.clear();
    for (const auto& [x, amp] : psi.entries()) {
      const Amplitude* partner = psi.Find(x ^ flip);
      if (!partner) continue;
      terms.push_back({x, std::conj(partner->value) * amp.value,
                       exact ? partner->exact->numerator * amp.exact->numerator : 0});
    }
    if (terms.empty()) continue;
    const BasisIndex z_positions = mask_of(all & ~flip_sel);
    for (unsigned y_sel = flip_sel;; y_sel = (y_sel - 1) & flip_sel) {
      const BasisIndex phase_mask = z_positions | mask_of(y_sel);
      const int y_count = std::popcount(y_sel);
      Complex sum(0.0, 0.0);
      int64_t exact_sum = 0;
      for (const auto& term : terms) {
        const int sign = ParitySign(term.index & phase_mask);
        sum += static_cast<double>(sign) * term.weight;
        exact_sum += sign * term.exact_weight;
      }
      sum = TimesIPower(sum, y_count);
      CheckResidue(sum.imag(), "Pauli expectation on " + subset.ToString());
      total += sum.real() * sum.real();
      if (exact) {
        if ((y_count & 1) && exact_sum != 0) {
          throw Error(ErrorCode::kNonHermitianResidue,
                      "odd-Y correlation of a real exact state is nonzero");
        }
        exact_total += static_cast<__int128>(exact_sum) * exact_sum;
      }
      if (y_sel == 0) break;
    }
  }

  FValue f;
  f.subset = subset;
  f.value = total;
  if (exact) {
    f.exact = Rational::FromWide(exact_total,
                                 static_cast<__int128>(psi.exact_scale()) * psi.exact_scale());
  }
  return f;
}

template <typename Lookup>
Purity AssemblePurity(int n_qubits, bool is_exact, const QubitSubset& subset, Lookup&& lookup) {
  const BasisIndex full = subset.Mask(n_qubits);
  double total = 1.0;
  std::optional<Rational> exact;
  if (is_exact) exact = Rational(1);
  // Ascending sub-mask order keeps the floating sum deterministic.
  for (BasisIndex sub = (0 - full) & full; sub != 0; sub = (sub - full) & full) {
    const FValue& f = lookup(sub);
    total += f.value;
    if (exact) *exact += *f.exact;
  }
  Purity p;
  p.value = std::ldexp(total, -subset.size());
  if (exact) p.exact = *exact * InversePowerOfTwo(subset.size());
  return p;
}

}  // namespace

PauliString PauliString::FromLetters(std::string_view letters) {
  CheckQubitCount(static_cast<int>(letters.size()));
  PauliString p;
  p.letters_ = std::string(letters);
  const int n = static_cast<int>(letters.size());
  for (int i = 0; i < n; ++i) {
    const BasisIndex bit = QubitBit(i + 1, n);
    switch (letters[i]) {
      case 'I': break;
      case 'X': p.flip_mask_ |= bit; break;
      case 'Y':
        p.flip_mask_ |= bit;
        p.phase_mask_ |= bit;
        ++p.y_count_;
        break;
      case 'Z': p.phase_mask_ |= bit; break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("Pauli letter '") + letters[i] + "' not in IXYZ");
    }
  }
  return p;
}

PauliString PauliString::OnSubset(int n_qubits, const QubitSubset& subset,
                                  std::string_view letters) {
  if (static_cast<int>(letters.size()) != subset.size()) {
    throw Error(ErrorCode::kInvalidArgument, "letter count differs from subset size");
  }
  std::string full(n_qubits, 'I');
  for (int i = 0; i < subset.size(); ++i) full[subset[i] - 1] = letters[i];
  return FromLetters(full);
}

QubitSubset PauliString::Support() const {
  std::vector<int> labels;
  for (int i = 0; i < n_qubits(); ++i) {
    if (letters_[i] != 'I') labels.push_back(i + 1);
  }
  return QubitSubset::Create(std::move(labels), n_qubits());
}

double PauliExpectation(const PureState& psi, const PauliString& p) {
  if (p.n_qubits() != psi.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "Pauli string on " + std::to_string(p.n_qubits()) +
                                                   " qubits, state on " +
                                                   std::to_string(psi.n_qubits()));
  }
  Complex sum(0.0, 0.0);
  for (const auto& [x, amp] : psi.entries()) {
    const Amplitude* partner = psi.Find(x ^ p.flip_mask());
    if (!partner) continue;
    sum += static_cast<double>(ParitySign(x & p.phase_mask())) * std::conj(partner->value) *
           amp.value;
  }
  sum = TimesIPower(sum, p.y_count());
  CheckResidue(sum.imag(), "expectation of " + p.letters());
  return sum.real();
}

std::optional<Rational> ExactPauliExpectation(const PureState& psi, const PauliString& p) {
  if (p.n_qubits() != psi.n_qubits()) {
    throw Error(ErrorCode::kDimensionMismatch, "Pauli string on " + std::to_string(p.n_qubits()) +
                                                   " qubits, state on " +
                                                   std::to_string(psi.n_qubits()));
  }
  if (!psi.is_exact()) return std::nullopt;
  __int128 sum = 0;
  for (const auto& [x, amp] : psi.entries()) {
    const Amplitude* partner = psi.Find(x ^ p.flip_mask());
    if (!partner) continue;
    sum += static_cast<__int128>(ParitySign(x & p.phase_mask())) * partner->exact->numerator *
           amp.exact->numerator;
  }
  if (p.y_count() & 1) {
    if (sum != 0) {
      throw Error(ErrorCode::kNonHermitianResidue, "expectation of " + p.letters());
    }
    return Rational(0);
  }
  if ((p.y_count() & 3) == 2) sum = -sum;
  return Rational::FromWide(sum, psi.exact_scale());
}

FValue ComputeFValue(const PureState& psi, const QubitSubset& subset) {
  CheckSubset(psi, subset);
  return FValueImpl(psi, subset);
}

Purity PurityViaInvariants(const PureState& psi, const QubitSubset& subset) {
  if (subset.empty()) return Purity{1.0, psi.is_exact() ? std::optional(Rational(1)) : std::nullopt};
  CheckSubset(psi, subset);
  FValue scratch;
  return AssemblePurity(psi.n_qubits(), psi.is_exact(), subset, [&](BasisIndex mask) -> const FValue& {
    scratch = FValueImpl(psi, SubsetFromMask(mask, psi.n_qubits()));
    return scratch;
  });
}

FTable::FTable(const PureState& psi, int max_size, int threads)
    : n_qubits_(psi.n_qubits()), max_size_(max_size), exact_(psi.is_exact()) {
  if (max_size > kMaxInvariantSubset) {
    throw Error(ErrorCode::kSubsetTooLarge, "F-table size " + std::to_string(max_size) +
                                                " exceeds " +
                                                std::to_string(kMaxInvariantSubset));
  }
  std::vector<QubitSubset> subsets;
  for (int size = 1; size <= std::min(max_size, n_qubits_); ++size) {
    auto layer = Combinations(n_qubits_, size);
    subsets.insert(subsets.end(), layer.begin(), layer.end());
  }
  values_.resize(subsets.size());
  ParallelFor(subsets.size(), threads,
              [&](size_t i) { values_[i] = FValueImpl(psi, subsets[i]); });
  for (size_t i = 0; i < subsets.size(); ++i) by_mask_[subsets[i].Mask(n_qubits_)] = i;
}

const FValue& FTable::Get(const QubitSubset& subset) const {
  auto it = by_mask_.find(subset.Mask(n_qubits_));
  if (it == by_mask_.end()) {
    throw Error(ErrorCode::kSubsetTooLarge,
                "subset " + subset.ToString() + " not covered by the F-table");
  }
  return values_[it->second];
}

Purity FTable::PurityOf(const QubitSubset& subset) const {
  if (subset.size() > max_size_) {
    throw Error(ErrorCode::kSubsetTooLarge,
                "subset " + subset.ToString() + " larger than the F-table");
  }
  if (subset.empty()) return Purity{1.0, exact_ ? std::optional(Rational(1)) : std::nullopt};
  return AssemblePurity(n_qubits_, exact_, subset, [&](BasisIndex mask) -> const FValue& {
    return values_[by_mask_.at(mask)];
  });
}

}  // namespace kuniform
