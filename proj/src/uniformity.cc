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

#include "kuniform/uniformity.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kuniform/error.h"
#include "kuniform/invariants.h"
#include "kuniform/parallel.h"

namespace kuniform {
namespace {

using nlohmann::ordered_json;

ordered_json RationalToJson(const Rational& r) {
  ordered_json j;
  j["num"] = r.num();
  j["den"] = r.den();
  return j;
}

ordered_json SubsetToJson(const QubitSubset& s) { return ordered_json(s.labels()); }

// Drops the exact parts when the run is in float mode.
Purity AsMode(Purity p, bool exact) {
  if (!exact) p.exact.reset();
  return p;
}

SubsetVerdict Judge(const PureState& psi, const QubitSubset& subset, const FTable& table,
                    bool exact, double tolerance) {
  SubsetVerdict v;
  v.subset = subset;
  v.purity_trace = AsMode(ComputePurity(PartialTrace(psi, subset)), exact);
  v.purity_invariant = AsMode(table.PurityOf(subset), exact);
  v.target = InversePowerOfTwo(subset.size());

  if (std::abs(v.purity_trace.value - v.purity_invariant.value) > kDualPathTolerance ||
      (exact && *v.purity_trace.exact != *v.purity_invariant.exact)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "purity of " + subset.ToString() + ": trace path " +
                    std::to_string(v.purity_trace.value) + " vs invariant path " +
                    std::to_string(v.purity_invariant.value));
  }
  if (exact) {
    Rational gap = Abs(*v.purity_trace.exact - v.target);
    v.deviation = gap.ToDouble();
    v.pass = gap.IsZero();
  } else {
    v.deviation = std::abs(v.purity_trace.value - v.target.ToDouble());
    v.pass = v.deviation <= tolerance;
  }
  return v;
}

bool SubsetPasses(const PureState& psi, const QubitSubset& subset, bool exact, double tolerance) {
  Purity p = ComputePurity(PartialTrace(psi, subset));
  Rational target = InversePowerOfTwo(subset.size());
  if (exact) return *p.exact == target;
  return std::abs(p.value - target.ToDouble()) <= tolerance;
}

}  // namespace

UniformityReport CheckUniformity(const PureState& psi, const UniformityOptions& options) {
  const int n = psi.n_qubits();
  const int k = options.k;
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (k > kMaxInvariantSubset) {
    throw Error(ErrorCode::kSubsetTooLarge, "k = " + std::to_string(k) +
                                                " exceeds the invariant-path limit " +
                                                std::to_string(kMaxInvariantSubset));
  }
  if (options.tolerance < 0) throw Error(ErrorCode::kInvalidArgument, "negative tolerance");
  if (options.arithmetic == Arithmetic::kExact && !psi.is_exact()) {
    throw Error(ErrorCode::kInvalidArgument, "exact mode requested for a state without an exact "
                                             "representation");
  }

  UniformityReport report;
  report.n_qubits = n;
  report.k = k;
  report.exact = psi.is_exact() && options.arithmetic != Arithmetic::kFloat;
  report.tolerance = report.exact ? 0.0 : options.tolerance;
  if (2 * k > n) {
    report.warnings.push_back("k = " + std::to_string(k) + " exceeds floor(n/2) = " +
                              std::to_string(n / 2) +
                              ": no " + std::to_string(n) + "-qubit state can be " +
                              std::to_string(k) + "-uniform");
  }

  std::vector<QubitSubset> subsets;
  const int smallest = options.mode == CheckMode::kAllSizes ? 1 : k;
  for (int size = smallest; size <= k; ++size) {
    auto layer = Combinations(n, size);
    subsets.insert(subsets.end(), layer.begin(), layer.end());
  }

  const FTable table(psi, k, options.threads);
  report.verdicts.resize(subsets.size());
  ParallelFor(subsets.size(), options.threads, [&](size_t i) {
    report.verdicts[i] = Judge(psi, subsets[i], table, report.exact, options.tolerance);
  });

  report.is_k_uniform = true;
  for (const auto& v : report.verdicts) {
    report.max_deviation = std::max(report.max_deviation, v.deviation);
    if (v.subset.size() == k && !v.pass) report.is_k_uniform = false;
  }
  if (2 * k > n) report.is_k_uniform = false;

  if (!report.is_k_uniform) {
    for (int size = 1; size <= k && report.witnesses.empty(); ++size) {
      auto layer = Combinations(n, size);
      std::vector<char> failing(layer.size(), 0);
      ParallelFor(layer.size(), options.threads, [&](size_t i) {
        failing[i] = !SubsetPasses(psi, layer[i], report.exact, options.tolerance);
      });
      for (size_t i = 0; i < layer.size(); ++i) {
        if (failing[i]) report.witnesses.push_back(layer[i]);
      }
    }
  }
  return report;
}

std::vector<PurityRow> PurityTable(const PureState& psi, int size, int threads) {
  if (size > kMaxInvariantSubset) {
    throw Error(ErrorCode::kSubsetTooLarge, "purity table size " + std::to_string(size) +
                                                " exceeds " +
                                                std::to_string(kMaxInvariantSubset));
  }
  if (size < 1 || size > psi.n_qubits()) {
    throw Error(ErrorCode::kInvalidArgument, "purity table size " + std::to_string(size) +
                                                 " outside [1, " +
                                                 std::to_string(psi.n_qubits()) + "]");
  }
  auto subsets = Combinations(psi.n_qubits(), size);
  std::vector<PurityRow> rows(subsets.size());
  ParallelFor(subsets.size(), threads, [&](size_t i) {
    rows[i] = PurityRow{subsets[i], ComputePurity(PartialTrace(psi, subsets[i]))};
  });
  return rows;
}

ordered_json PurityToJson(const Purity& purity, bool exact) {
  if (exact && purity.exact) return RationalToJson(*purity.exact);
  return purity.value;
}

ordered_json ReportToJson(const UniformityReport& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n_qubits"] = report.n_qubits;
  j["k"] = report.k;
  j["mode"] = report.exact ? "exact" : "float";
  j["tolerance"] = report.tolerance;
  j["is_k_uniform"] = report.is_k_uniform;
  j["max_deviation"] = report.max_deviation;
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json jv;
    jv["subset"] = SubsetToJson(v.subset);
    jv["purity"] = PurityToJson(v.purity_trace, report.exact);
    jv["target"] = RationalToJson(v.target);
    jv["deviation"] = v.deviation;
    jv["pass"] = v.pass;
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(SubsetToJson(w));
  j["witnesses"] = std::move(witnesses);
  j["warnings"] = report.warnings;
  j["notes"] = report.notes;
  return j;
}

ordered_json PurityTableToJson(const std::vector<PurityRow>& rows, bool exact) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["subset"] = SubsetToJson(row.subset);
    j["purity"] = PurityToJson(row.purity, exact);
    out.push_back(std::move(j));
  }
  return out;
}

std::string ReportToText(const UniformityReport& report) {
  std::ostringstream out;
  size_t passed = 0;
  for (const auto& v : report.verdicts) passed += v.pass;
  out << report.n_qubits << " qubits, k = " << report.k << ", "
      << (report.exact ? "exact" : "float") << " arithmetic";
  if (!report.exact) out << " (tolerance " << report.tolerance << ")";
  out << "\n";
  out << "verdict: " << (report.is_k_uniform ? "" : "NOT ") << report.k << "-uniform\n";
  out << "subsets passing: " << passed << "/" << report.verdicts.size()
      << ", max deviation " << report.max_deviation << "\n";
  for (const auto& v : report.verdicts) {
    if (v.pass) continue;
    out << "  fail " << v.subset.ToString() << " purity "
        << (report.exact ? v.purity_trace.exact->ToString() : std::to_string(v.purity_trace.value))
        << " target " << v.target.ToString() << "\n";
  }
  if (!report.witnesses.empty()) {
    out << "minimal witnesses (size " << report.witnesses.front().size() << "):";
    for (const auto& w : report.witnesses) out << " " << w.ToString();
    out << "\n";
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

}  // namespace kuniform
