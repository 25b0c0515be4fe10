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

#include "kuniform/state_io.h"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

#include "kuniform/error.h"

namespace kuniform {
namespace {

std::string_view StripComment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<std::string> SplitWhitespace(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

double ParseDouble(const std::string& word, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw SyntaxError(line, 1, "expected a number, got '" + word + "'");
  }
  return value;
}

}  // namespace

PureState ParsePlainState(std::string_view text, bool normalize) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int n_qubits = -1;
  std::vector<BasisEntry> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    auto words = SplitWhitespace(StripComment(raw));
    if (words.empty()) continue;
    if (n_qubits < 0) {
      if (words.size() != 2 || words[0] != "nqubits") {
        throw SyntaxError(line_no, 1, "expected 'nqubits N'");
      }
      int n = 0;
      auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), n);
      if (ec != std::errc() || ptr != words[1].data() + words[1].size()) {
        throw SyntaxError(line_no, 9, "bad qubit count '" + words[1] + "'");
      }
      CheckQubitCount(n);
      n_qubits = n;
      continue;
    }
    if (words.size() < 2 || words.size() > 3) {
      throw SyntaxError(line_no, 1, "expected '<bitstring> <re> [<im>]'");
    }
    if (static_cast<int>(words[0].size()) != n_qubits) {
      throw Error(ErrorCode::kBadBitstring,
                  "line " + std::to_string(line_no) + ": bitstring '" + words[0] +
                      "' does not have " + std::to_string(n_qubits) + " characters");
    }
    BasisEntry e;
    e.bits = words[0];
    e.re = ParseDouble(words[1], line_no);
    e.im = words.size() == 3 ? ParseDouble(words[2], line_no) : 0.0;
    entries.push_back(std::move(e));
  }
  if (n_qubits < 0) throw SyntaxError(line_no + 1, 1, "missing 'nqubits' header");
  return MakeState(n_qubits, entries, normalize);
}

std::string WritePlainState(const PureState& psi) {
  std::string out = "nqubits " + std::to_string(psi.n_qubits()) + "\n";
  char buf[96];
  for (const auto& [index, amp] : psi.entries()) {
    std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", amp.value.real(), amp.value.imag());
    out += IndexToBitstring(index, psi.n_qubits());
    out += buf;
  }
  return out;
}

bool LooksLikePlainState(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    auto words = SplitWhitespace(StripComment(raw));
    if (!words.empty()) return words[0] == "nqubits";
  }
  return false;
}

}  // namespace kuniform
