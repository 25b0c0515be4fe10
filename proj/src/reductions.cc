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

#include "kuniform/reductions.h"

#include <algorithm>

#include "kuniform/error.h"

namespace kuniform {
namespace {

struct SupportItem {
  BasisIndex environment;
  int local;
  const Amplitude* amplitude;
};

}  // namespace

DensityMatrix PartialTrace(const PureState& psi, const QubitSubset& keep) {
  const int n = psi.n_qubits();
  const int m = keep.size();
  if (m > kMaxReducedQubits) {
    throw Error(ErrorCode::kSubsetTooLarge, "cannot reduce onto " + std::to_string(m) +
                                                " qubits (limit " +
                                                std::to_string(kMaxReducedQubits) + ")");
  }
  if (!keep.empty() && keep.labels().back() > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "subset " + keep.ToString() + " on a " +
                                                 std::to_string(n) + "-qubit state");
  }

  DensityMatrix rho;
  rho.subset = keep;
  rho.dim = 1 << m;
  rho.entries.assign(static_cast<size_t>(rho.dim) * rho.dim, Complex(0.0, 0.0));
  if (psi.is_exact()) {
    rho.exact = ExactDensity{std::vector<int64_t>(rho.entries.size(), 0), psi.exact_scale()};
  }

  const BasisIndex keep_mask = keep.Mask(n);
  std::vector<SupportItem> items;
  items.reserve(psi.support_size());
  for (const auto& [index, amp] : psi.entries()) {
    int local = 0;
    for (int i = 0; i < m; ++i) {
      if (index & QubitBit(keep[i], n)) local |= 1 << (m - 1 - i);
    }
    items.push_back({index & ~keep_mask, local, &amp});
  }
  std::stable_sort(items.begin(), items.end(), [](const SupportItem& a, const SupportItem& b) {
    return a.environment < b.environment;
  });

  // Only pairs sharing the traced-out bits contribute.
  for (size_t begin = 0; begin < items.size();) {
    size_t end = begin;
    while (end < items.size() && items[end].environment == items[begin].environment) ++end;
    for (size_t i = begin; i < end; ++i) {
      for (size_t j = begin; j < end; ++j) {
        const size_t cell = static_cast<size_t>(items[i].local) * rho.dim + items[j].local;
        rho.entries[cell] += items[i].amplitude->value * std::conj(items[j].amplitude->value);
        if (rho.exact) {
          rho.exact->counts[cell] +=
              items[i].amplitude->exact->numerator * items[j].amplitude->exact->numerator;
        }
      }
    }
    begin = end;
  }
  return rho;
}

Purity ComputePurity(const DensityMatrix& rho) {
  Purity p;
  for (const Complex& z : rho.entries) p.value += std::norm(z);
  if (rho.exact) {
    __int128 total = 0;
    for (int64_t c : rho.exact->counts) total += static_cast<__int128>(c) * c;
    p.exact = Rational::FromWide(total, static_cast<__int128>(rho.exact->scale) * rho.exact->scale);
  }
  return p;
}

}  // namespace kuniform
