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

#include "kuniform/oa.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "kuniform/error.h"

namespace kuniform {

SignVector SignVector::Parse(std::string_view text) {
  SignVector v;
  for (char c : text) {
    if (c == '+') {
      v.signs.push_back(1);
    } else if (c == '-') {
      v.signs.push_back(-1);
    } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("sign vector character '") + c + "' is not '+' or '-'");
    }
  }
  return v;
}

SignVector SignVector::Canonical() const {
  SignVector out = *this;
  if (!out.signs.empty() && out.signs.front() < 0) {
    for (int& s : out.signs) s = -s;
  }
  return out;
}

std::string SignVector::ToString() const {
  std::string out;
  out.reserve(signs.size());
  for (int s : signs) out += s > 0 ? '+' : '-';
  return out;
}

OrthogonalArray OrthogonalArray::Create(int factors, std::vector<BasisIndex> rows) {
  CheckQubitCount(factors);
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "array has no rows");
  for (BasisIndex row : rows) {
    if (row >> factors) {
      throw Error(ErrorCode::kIndexOutOfRange, "row wider than " + std::to_string(factors) +
                                                   " columns");
    }
  }
  std::vector<BasisIndex> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::kDuplicateRow, "row " + IndexToBitstring(*dup, factors) +
                                              " appears more than once");
  }
  return OrthogonalArray(factors, std::move(rows));
}

OrthogonalArray OrthogonalArray::FromBitstrings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "array has no rows");
  const int factors = static_cast<int>(rows.front().size());
  std::vector<BasisIndex> words;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != factors) {
      throw Error(ErrorCode::kBadBitstring, "row '" + r + "' has the wrong width");
    }
    words.push_back(BitstringToIndex(r));
  }
  return Create(factors, std::move(words));
}

OrthogonalArray OrthogonalArray::Sorted() const {
  std::vector<BasisIndex> rows = rows_;
  std::sort(rows.begin(), rows.end());
  return OrthogonalArray(factors_, std::move(rows));
}

namespace {

// Projects a row onto the given columns, first column most significant.
BasisIndex Project(BasisIndex row, const QubitSubset& columns, int factors) {
  BasisIndex pattern = 0;
  for (int c : columns) pattern = (pattern << 1) | ((row >> (factors - c)) & 1);
  return pattern;
}

}  // namespace

StrengthResult OaStrength(const OrthogonalArray& array, int t_max) {
  const int r = array.runs();
  const int n = array.factors();
  if (t_max < 0 || t_max > n || t_max >= 62 || (int64_t{1} << t_max) > r) {
    throw Error(ErrorCode::kInvalidArgument,
                "strength bound " + std::to_string(t_max) + " needs t <= N = " +
                    std::to_string(n) + " and 2^t <= r = " + std::to_string(r));
  }
  StrengthResult result;
  std::vector<int64_t> counts;
  for (int t = 1; t <= t_max; ++t) {
    const int64_t patterns = int64_t{1} << t;
    const double expected = static_cast<double>(r) / static_cast<double>(patterns);
    for (const QubitSubset& columns : Combinations(n, t)) {
      counts.assign(patterns, 0);
      for (BasisIndex row : array.rows()) ++counts[Project(row, columns, n)];
      for (int64_t p = 0; p < patterns; ++p) {
        if (static_cast<double>(counts[p]) < expected) {
          result.strength = t - 1;
          result.witness = StrengthWitness{columns, static_cast<BasisIndex>(p), counts[p], expected};
          return result;
        }
      }
    }
  }
  result.strength = t_max;
  return result;
}

IrredundancyResult OaIrredundant(const OrthogonalArray& array, int k) {
  const int n = array.factors();
  if (k < 0 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "irredundancy level " + std::to_string(k) + " needs 0 <= k < N = " +
                    std::to_string(n));
  }
  const BasisIndex all = (BasisIndex{1} << n) - 1;
  std::vector<std::pair<BasisIndex, int>> restricted(array.runs());
  for (const QubitSubset& dropped : Combinations(n, k)) {
    const BasisIndex keep = all & ~dropped.Mask(n);
    for (int i = 0; i < array.runs(); ++i) restricted[i] = {array.rows()[i] & keep, i};
    std::sort(restricted.begin(), restricted.end());
    for (size_t i = 1; i < restricted.size(); ++i) {
      if (restricted[i].first == restricted[i - 1].first) {
        return {false, IrredundancyWitness{dropped, restricted[i - 1].second,
                                           restricted[i].second}};
      }
    }
  }
  return {};
}

PureState StateFromOa(const OrthogonalArray& array, const std::optional<SignVector>& signs) {
  if (signs && signs->size() != static_cast<size_t>(array.runs())) {
    throw Error(ErrorCode::kInvalidArgument,
                "sign vector length " + std::to_string(signs->size()) + " for " +
                    std::to_string(array.runs()) + " rows");
  }
  std::vector<std::pair<BasisIndex, int64_t>> numerators;
  numerators.reserve(array.runs());
  for (int i = 0; i < array.runs(); ++i) {
    numerators.emplace_back(array.rows()[i], signs ? signs->signs[i] : 1);
  }
  try {
    return PureState::FromExact(array.factors(), std::move(numerators), array.runs());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDuplicateBasisState) {
      throw Error(ErrorCode::kDuplicateRow, e.what());
    }
    throw;
  }
}

SignedArray OaFromState(const PureState& psi) {
  if (!psi.is_uniform_magnitude()) {
    throw Error(ErrorCode::kNotUniformMagnitude,
                "amplitudes are not all +-1/sqrt(" + std::to_string(psi.support_size()) + ")");
  }
  std::vector<BasisIndex> rows;
  SignVector signs;
  for (const auto& [index, amp] : psi.entries()) {
    rows.push_back(index);
    signs.signs.push_back(amp.exact->numerator > 0 ? 1 : -1);
  }
  return {OrthogonalArray::Create(psi.n_qubits(), std::move(rows)), std::move(signs)};
}

OrthogonalArray SupportArray(const PureState& psi) {
  std::vector<BasisIndex> rows;
  for (const auto& entry : psi.entries()) rows.push_back(entry.first);
  return OrthogonalArray::Create(psi.n_qubits(), std::move(rows));
}

bool IsLinear(const OrthogonalArray& array) {
  std::vector<BasisIndex> sorted = array.Sorted().rows();
  for (BasisIndex a : sorted) {
    for (BasisIndex b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), a ^ b)) return false;
    }
  }
  return true;
}

int DualMinimumDistance(const OrthogonalArray& array) {
  const int n = array.factors();
  if (n > 24) throw Error(ErrorCode::kInvalidArgument, "dual enumeration limited to 24 columns");
  int best = n + 1;
  for (BasisIndex v = 1; v < (BasisIndex{1} << n); ++v) {
    const int weight = std::popcount(v);
    if (weight >= best) continue;
    bool orthogonal = std::all_of(array.rows().begin(), array.rows().end(),
                                  [v](BasisIndex row) { return std::popcount(row & v) % 2 == 0; });
    if (orthogonal) best = weight;
  }
  return best;
}

OrthogonalArray ParseOa(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  std::optional<int> declared_runs;
  std::optional<int> declared_factors;
  std::vector<std::string> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    std::string first;
    if (!(words >> first)) continue;
    if (first == "oa") {
      if (declared_runs || !rows.empty()) throw SyntaxError(line_no, 1, "misplaced 'oa' header");
      int r = 0, n = 0, levels = 0;
      if (!(words >> r >> n >> levels) || r < 1 || n < 1) {
        throw SyntaxError(line_no, 1, "header must read 'oa r N 2 [t]'");
      }
      if (levels != 2) throw SyntaxError(line_no, 1, "only 2-level arrays are supported");
      int strength = 0;
      words >> strength;  // informational; recomputed on demand
      declared_runs = r;
      declared_factors = n;
      continue;
    }
    std::string row;
    for (size_t col = 0; col < raw.size(); ++col) {
      char c = raw[col];
      if (c == '0' || c == '1') {
        row += c;
      } else if (c != ' ' && c != '\t' && c != '\r') {
        throw SyntaxError(line_no, static_cast<int>(col) + 1,
                          std::string("unexpected character '") + c + "' in array row");
      }
    }
    const size_t width = declared_factors ? static_cast<size_t>(*declared_factors)
                         : rows.empty()   ? row.size()
                                          : rows.front().size();
    if (row.size() != width) {
      throw SyntaxError(line_no, 1, "row has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(width));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SyntaxError(line_no + 1, 1, "array has no rows");
  if (declared_runs && *declared_runs != static_cast<int>(rows.size())) {
    throw SyntaxError(line_no, 1, "header declares " + std::to_string(*declared_runs) +
                                      " rows, found " + std::to_string(rows.size()));
  }
  return OrthogonalArray::FromBitstrings(rows);
}

std::string WriteOa(const OrthogonalArray& array, int strength) {
  std::string out = "oa " + std::to_string(array.runs()) + " " +
                    std::to_string(array.factors()) + " 2 " + std::to_string(strength) + "\n";
  for (int i = 0; i < array.runs(); ++i) out += array.RowString(i) + "\n";
  return out;
}

nlohmann::ordered_json StrengthToJson(const StrengthResult& result) {
  nlohmann::ordered_json j;
  j["strength"] = result.strength;
  if (result.witness) {
    const auto& w = *result.witness;
    nlohmann::ordered_json jw;
    jw["columns"] = w.columns.labels();
    jw["pattern"] = IndexToBitstring(w.pattern, w.columns.size());
    jw["observed"] = w.observed;
    jw["expected"] = w.expected;
    j["witness"] = std::move(jw);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json IrredundancyToJson(int k, const IrredundancyResult& result,
                                          const OrthogonalArray& array) {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["irredundant"] = result.irredundant;
  if (result.witness) {
    const auto& w = *result.witness;
    nlohmann::ordered_json jw;
    jw["dropped_columns"] = w.dropped.labels();
    jw["rows"] = {w.first_row + 1, w.second_row + 1};
    jw["row_values"] = {array.RowString(w.first_row), array.RowString(w.second_row)};
    j["witness"] = std::move(jw);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace kuniform
