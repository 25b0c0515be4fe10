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

#ifndef KUNIFORM_UNIFORMITY_H_
#define KUNIFORM_UNIFORMITY_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kuniform/rational.h"
#include "kuniform/reductions.h"
#include "kuniform/state.h"

namespace kuniform {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kDefaultTolerance = 1e-10;
// Trace-path and invariant-path purities must agree to this, always.
inline constexpr double kDualPathTolerance = 1e-10;

enum class CheckMode { kSizeKOnly, kAllSizes };
enum class Arithmetic { kAuto, kExact, kFloat };

struct UniformityOptions {
  int k = 1;
  CheckMode mode = CheckMode::kSizeKOnly;
  double tolerance = kDefaultTolerance;
  Arithmetic arithmetic = Arithmetic::kAuto;
  int threads = 1;
};

struct SubsetVerdict {
  QubitSubset subset;
  Purity purity_trace;
  Purity purity_invariant;
  Rational target;
  double deviation = 0.0;
  bool pass = false;
};

struct UniformityReport {
  int n_qubits = 0;
  int k = 0;
  bool exact = false;
  double tolerance = 0.0;
  bool is_k_uniform = false;
  double max_deviation = 0.0;
  // Sorted by size, then lexicographically.
  std::vector<SubsetVerdict> verdicts;
  // Failing subsets of the smallest failing size; empty when uniform.
  std::vector<QubitSubset> witnesses;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

// Checks every k-subset (and all smaller ones in kAllSizes mode) through
// both the partial-trace path and the Pauli-invariant path. Exact arithmetic
// is used whenever the state allows it (kAuto) and then a subset passes only
// on rational equality with 2^-|S|.
//
// Throws InternalInconsistency if the two paths disagree, SubsetTooLarge for
// k above the invariant-path limit, InvalidArgument for k < 1, k > n, or
// kExact on a state without an exact representation.
UniformityReport CheckUniformity(const PureState& psi, const UniformityOptions& options);

struct PurityRow {
  QubitSubset subset;
  Purity purity;
};

// Purity of every subset of the given size, lexicographic order.
std::vector<PurityRow> PurityTable(const PureState& psi, int size, int threads = 1);

nlohmann::ordered_json PurityToJson(const Purity& purity, bool exact);
nlohmann::ordered_json ReportToJson(const UniformityReport& report);
nlohmann::ordered_json PurityTableToJson(const std::vector<PurityRow>& rows, bool exact);
std::string ReportToText(const UniformityReport& report);

}  // namespace kuniform

#endif  // KUNIFORM_UNIFORMITY_H_
