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

#include "kuniform/phase_search.h"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "kuniform/error.h"
#include "kuniform/parallel.h"

namespace kuniform {
namespace {

int ParitySign(BasisIndex bits) { return std::popcount(bits) & 1 ? -1 : 1; }

// Gray-code position c -> canonical sign vector (row 0 fixed to +1).
std::vector<int> GraySigns(uint64_t position, int runs) {
  const uint64_t gray = position ^ (position >> 1);
  std::vector<int> signs(runs, 1);
  for (int row = 1; row < runs; ++row) {
    if ((gray >> (row - 1)) & 1) signs[row] = -1;
  }
  return signs;
}

}  // namespace

SignObjective::SignObjective(const OrthogonalArray& array, int k) : runs_(array.runs()) {
  const int n = array.factors();
  if (k < 1 || k > kMaxSearchK || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "sign objective needs 1 <= k <= min(4, N); got k = " +
                                                 std::to_string(k));
  }
  const auto& rows = array.rows();
  std::unordered_map<BasisIndex, int> row_of;
  for (int i = 0; i < runs_; ++i) row_of[rows[i]] = i;

  std::vector<std::pair<int, int>> pairs;
  for (int size = 1; size <= k; ++size) {
    for (const QubitSubset& subset : Combinations(n, size)) {
      std::vector<BasisIndex> bits;
      for (int q : subset) bits.push_back(QubitBit(q, n));
      auto mask_of = [&](unsigned sel) {
        BasisIndex m = 0;
        for (int i = 0; i < size; ++i) {
          if (sel & (1u << i)) m |= bits[i];
        }
        return m;
      };
      const unsigned all = (1u << size) - 1;
      for (unsigned flip_sel = 0; flip_sel <= all; ++flip_sel) {
        const BasisIndex flip = mask_of(flip_sel);
        const BasisIndex z_positions = mask_of(all & ~flip_sel);
        if (flip_sel == 0) {
          int64_t e = 0;
          for (BasisIndex row : rows) e += ParitySign(row & z_positions);
          constant_ += e * e;
          continue;
        }
        pairs.clear();
        for (int i = 0; i < runs_; ++i) {
          auto it = row_of.find(rows[i] ^ flip);
          if (it != row_of.end()) pairs.emplace_back(i, it->second);
        }
        if (pairs.empty()) continue;
        for (unsigned y_sel = flip_sel;; y_sel = (y_sel - 1) & flip_sel) {
          const int y_count = std::popcount(y_sel);
          if (y_count % 2 == 0) {
            const BasisIndex phase_mask = z_positions | mask_of(y_sel);
            const int y_sign = y_count % 4 == 2 ? -1 : 1;
            const int id = string_count_++;
            for (auto [i, j] : pairs) {
              terms_.push_back({id, i, j, y_sign * ParitySign(rows[i] & phase_mask)});
            }
          }
          if (y_sel == 0) break;
        }
      }
    }
  }
  incidence_.assign(runs_, {});
  for (int t = 0; t < static_cast<int>(terms_.size()); ++t) {
    incidence_[terms_[t].first].push_back(t);
    incidence_[terms_[t].second].push_back(t);
  }
}

int64_t SignObjective::Numerator(const std::vector<int>& signs) const {
  if (signs.size() != static_cast<size_t>(runs_)) {
    throw Error(ErrorCode::kInvalidArgument, "sign vector length " + std::to_string(signs.size()) +
                                                 " for " + std::to_string(runs_) + " rows");
  }
  std::vector<int64_t> expectations(string_count_, 0);
  for (const PairTerm& t : terms_) {
    expectations[t.string_id] += t.eps * signs[t.first] * signs[t.second];
  }
  int64_t total = constant_;
  for (int64_t e : expectations) total += e * e;
  return total;
}

double SignObjective::ToValue(int64_t numerator) const {
  return static_cast<double>(numerator) / (static_cast<double>(runs_) * runs_);
}

SignObjective::Walker::Walker(const SignObjective& objective, std::vector<int> signs)
    : objective_(&objective),
      signs_(std::move(signs)),
      expectations_(objective.string_count_, 0),
      delta_(objective.string_count_, 0) {
  for (const PairTerm& t : objective.terms_) {
    expectations_[t.string_id] += t.eps * signs_[t.first] * signs_[t.second];
  }
  numerator_ = objective.constant_;
  for (int64_t e : expectations_) numerator_ += e * e;
}

int64_t SignObjective::Walker::NumeratorAfterFlip(int row) const {
  touched_.clear();
  for (int idx : objective_->incidence_[row]) {
    const PairTerm& t = objective_->terms_[idx];
    if (delta_[t.string_id] == 0) touched_.push_back(t.string_id);
    delta_[t.string_id] -= 2 * t.eps * signs_[t.first] * signs_[t.second];
  }
  int64_t result = numerator_;
  for (int id : touched_) {
    const int64_t before = expectations_[id];
    const int64_t after = before + delta_[id];
    result += after * after - before * before;
    delta_[id] = 0;
  }
  return result;
}

void SignObjective::Walker::Flip(int row) {
  for (int idx : objective_->incidence_[row]) {
    const PairTerm& t = objective_->terms_[idx];
    const int64_t before = expectations_[t.string_id];
    const int64_t after = before - 2 * t.eps * signs_[t.first] * signs_[t.second];
    numerator_ += after * after - before * before;
    expectations_[t.string_id] = after;
  }
  signs_[row] = -signs_[row];
}

double Objective(const OrthogonalArray& array, const SignVector& signs, int k) {
  SignObjective objective(array, k);
  return objective.ToValue(objective.Numerator(signs.signs));
}

SearchOutcome SearchExhaustive(const OrthogonalArray& array, int k, int max_bits, int threads) {
  const int runs = array.runs();
  if (runs - 1 > max_bits || runs - 1 > 40) {
    throw Error(ErrorCode::kSupportTooLarge,
                std::to_string(runs) + " rows need 2^" + std::to_string(runs - 1) +
                    " candidates; exhaustive budget is 2^" + std::to_string(max_bits));
  }
  const SignObjective objective(array, k);
  const uint64_t total = uint64_t{1} << (runs - 1);
  const uint64_t chunks = std::min<uint64_t>(total, 256);

  struct Best {
    int64_t numerator = INT64_MAX;
    uint64_t position = 0;
  };
  std::vector<Best> best(chunks);
  ParallelFor(chunks, threads, [&](size_t chunk) {
    const uint64_t begin = total * chunk / chunks;
    const uint64_t end = total * (chunk + 1) / chunks;
    SignObjective::Walker walker(objective, GraySigns(begin, runs));
    Best local{walker.numerator(), begin};
    for (uint64_t c = begin + 1; c < end; ++c) {
      walker.Flip(std::countr_zero(c) + 1);
      if (walker.numerator() < local.numerator) local = {walker.numerator(), c};
    }
    best[chunk] = local;
  });
  Best overall = best.front();
  for (const Best& b : best) {
    if (b.numerator < overall.numerator) overall = b;
  }

  SearchOutcome outcome;
  outcome.method = SearchMethod::kExhaustive;
  outcome.certificate = true;
  outcome.best_signs = SignVector{GraySigns(overall.position, runs)};
  outcome.objective_numerator = overall.numerator;
  outcome.objective = objective.ToValue(overall.numerator);
  outcome.achieved_k_uniform = overall.numerator == 0;
  outcome.evaluations = static_cast<int64_t>(total);
  return outcome;
}

SearchOutcome SearchLocal(const OrthogonalArray& array, int k, int restarts, uint64_t seed) {
  if (restarts < 1) throw Error(ErrorCode::kInvalidArgument, "restarts must be >= 1");
  const int runs = array.runs();
  const SignObjective objective(array, k);
  std::mt19937_64 engine(seed);

  SearchOutcome outcome;
  outcome.method = SearchMethod::kLocal;
  outcome.objective_numerator = INT64_MAX;
  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<int> start(runs, 1);
    if (restart > 0) {
      for (int row = 1; row < runs; ++row) start[row] = (engine() >> 63) ? -1 : 1;
    }
    SignObjective::Walker walker(objective, std::move(start));
    ++outcome.evaluations;
    std::vector<double> trajectory{objective.ToValue(walker.numerator())};
    while (walker.numerator() != 0) {
      int64_t best = walker.numerator();
      int best_row = -1;
      for (int row = 1; row < runs; ++row) {
        const int64_t candidate = walker.NumeratorAfterFlip(row);
        ++outcome.evaluations;
        if (candidate < best) {
          best = candidate;
          best_row = row;
        }
      }
      if (best_row < 0) break;
      walker.Flip(best_row);
      trajectory.push_back(objective.ToValue(walker.numerator()));
    }
    if (walker.numerator() < outcome.objective_numerator) {
      outcome.objective_numerator = walker.numerator();
      outcome.best_signs = SignVector{walker.signs()};
      outcome.trajectory = std::move(trajectory);
    }
    if (outcome.objective_numerator == 0) break;
  }
  outcome.objective = objective.ToValue(outcome.objective_numerator);
  outcome.achieved_k_uniform = outcome.objective_numerator == 0;
  return outcome;
}

nlohmann::ordered_json SearchOutcomeToJson(const SearchOutcome& outcome) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["method"] = outcome.method == SearchMethod::kExhaustive ? "exhaustive" : "local";
  j["certificate"] = outcome.certificate;
  j["objective"] = outcome.objective;
  j["achieved_k_uniform"] = outcome.achieved_k_uniform;
  j["evaluations"] = outcome.evaluations;
  j["best_signs"] = outcome.best_signs.ToString();
  return j;
}

}  // namespace kuniform
