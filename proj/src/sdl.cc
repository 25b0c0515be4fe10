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

#include "kuniform/sdl.h"

#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "kuniform/error.h"

namespace kuniform {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Cursor over a single comment-stripped line.
class LineCursor {
 public:
  LineCursor(std::string_view line, int line_no) : line_(line), line_no_(line_no) {
    auto hash = line_.find('#');
    if (hash != std::string_view::npos) line_ = line_.substr(0, hash);
  }

  void SkipSpace() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  bool AtEnd() {
    SkipSpace();
    return pos_ >= line_.size();
  }

  char Peek() {
    SkipSpace();
    return pos_ < line_.size() ? line_[pos_] : '\0';
  }

  bool Consume(char c) {
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }

  void Expect(char c) {
    if (!Consume(c)) Fail(std::string("expected '") + c + "'");
  }

  bool ConsumeWord(std::string_view word) {
    SkipSpace();
    if (line_.substr(pos_, word.size()) != word) return false;
    size_t after = pos_ + word.size();
    if (after < line_.size() && std::isalnum(static_cast<unsigned char>(line_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void ExpectWord(std::string_view word) {
    if (!ConsumeWord(word)) Fail("expected '" + std::string(word) + "'");
  }

  int64_t ParseInt() {
    SkipSpace();
    size_t start = pos_;
    int64_t value = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      if (value > (INT64_MAX - 9) / 10) Fail("integer too large");
      value = value * 10 + (line_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) Fail("expected an integer");
    return value;
  }

  // INT "/sqrt(" INT ")" | INT
  SdlCoefficient ParseCoefficient() {
    SdlCoefficient c;
    c.numerator = ParseInt();
    if (Consume('/')) {
      ExpectWord("sqrt");
      Expect('(');
      c.radicand = ParseInt();
      if (c.radicand == 0) Fail("zero under square root");
      Expect(')');
    }
    return c;
  }

  std::string ParseBits() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < line_.size() && (line_[pos_] == '0' || line_[pos_] == '1')) ++pos_;
    if (pos_ == start) Fail("expected a bitstring");
    if (pos_ < line_.size() && std::isalnum(static_cast<unsigned char>(line_[pos_]))) {
      Fail("bitstring may only contain '0' and '1'");
    }
    return std::string(line_.substr(start, pos_ - start));
  }

  int column() const { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void Fail(const std::string& message) {
    throw SyntaxError(line_no_, column(), message);
  }

 private:
  std::string_view line_;
  int line_no_;
  size_t pos_ = 0;
};

SdlBlock ParseBlock(LineCursor& cur, int line_no) {
  SdlBlock block;
  cur.ExpectWord("block");
  cur.Expect('(');
  do {
    block.qubits.push_back(static_cast<int>(cur.ParseInt()));
  } while (cur.Consume(','));
  cur.Expect(')');
  cur.Expect('{');
  int pending_sign = 1;
  while (true) {
    SdlKet ket;
    ket.sign = pending_sign;
    if (cur.Consume('-')) {
      ket.sign = -ket.sign;
    } else {
      cur.Consume('+');
    }
    int column = cur.column();
    ket.bits = cur.ParseBits();
    if (ket.bits.size() != block.qubits.size()) {
      throw Error(ErrorCode::kBlockWidthMismatch,
                  "line " + std::to_string(line_no) + ", column " + std::to_string(column) +
                      ": ket '" + ket.bits + "' has " + std::to_string(ket.bits.size()) +
                      " bits but the block lists " + std::to_string(block.qubits.size()) +
                      " qubits");
    }
    block.kets.push_back(std::move(ket));
    if (cur.Consume('+')) {
      pending_sign = 1;
    } else if (cur.Consume('-')) {
      pending_sign = -1;
    } else {
      break;
    }
  }
  cur.Expect('}');
  return block;
}

SdlTerm ParseTerm(LineCursor& cur, int line_no) {
  SdlTerm term;
  term.line = line_no;
  cur.ExpectWord("term");
  int sign = 1;
  if (cur.Consume('-')) {
    sign = -1;
  } else {
    cur.Consume('+');
  }
  if (std::isdigit(static_cast<unsigned char>(cur.Peek()))) {
    term.coefficient = cur.ParseCoefficient();
  }
  term.coefficient.numerator *= sign;
  cur.Expect(':');
  do {
    term.blocks.push_back(ParseBlock(cur, line_no));
  } while (cur.Consume('*'));
  if (!cur.AtEnd()) cur.Fail("unexpected trailing input");
  return term;
}

void CheckCoverage(const SdlTerm& term, int term_number, int n_qubits) {
  std::set<int> seen;
  for (const auto& block : term.blocks) {
    for (int q : block.qubits) {
      if (q < 1 || q > n_qubits) {
        throw Error(ErrorCode::kQubitCoverageError,
                    "term " + std::to_string(term_number) + " (line " +
                        std::to_string(term.line) + "): qubit " + std::to_string(q) +
                        " outside [1, " + std::to_string(n_qubits) + "]");
      }
      if (!seen.insert(q).second) {
        throw Error(ErrorCode::kQubitCoverageError,
                    "term " + std::to_string(term_number) + " (line " +
                        std::to_string(term.line) + "): qubit " + std::to_string(q) +
                        " appears in more than one block position");
      }
    }
  }
  if (static_cast<int>(seen.size()) != n_qubits) {
    for (int q = 1; q <= n_qubits; ++q) {
      if (!seen.count(q)) {
        throw Error(ErrorCode::kQubitCoverageError,
                    "term " + std::to_string(term_number) + " (line " +
                        std::to_string(term.line) + "): qubit " + std::to_string(q) +
                        " not covered");
      }
    }
  }
}

// Largest integer whose square is <= v, or -1 when v is not a perfect square.
int64_t ExactSqrt(int64_t v) {
  auto root = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
  while (root > 0 && static_cast<__int128>(root) * root > v) --root;
  while (static_cast<__int128>(root + 1) * (root + 1) <= v) ++root;
  return static_cast<__int128>(root) * root == v ? root : -1;
}

bool FirstToken(std::string_view text, std::string_view word) {
  for (auto line : SplitLines(text)) {
    LineCursor cur(line, 0);
    if (cur.AtEnd()) continue;
    return cur.ConsumeWord(word);
  }
  return false;
}

}  // namespace

double SdlCoefficient::Value() const {
  return static_cast<double>(numerator) / std::sqrt(static_cast<double>(radicand));
}

SdlDocument ParseSdl(std::string_view text) {
  SdlDocument doc;
  enum class Expecting { kState, kNorm, kTerms } expecting = Expecting::kState;
  int line_no = 0;
  for (auto line : SplitLines(text)) {
    ++line_no;
    LineCursor cur(line, line_no);
    if (cur.AtEnd()) continue;
    switch (expecting) {
      case Expecting::kState: {
        cur.ExpectWord("state");
        int64_t n = cur.ParseInt();
        if (n < 1 || n > kMaxQubits) cur.Fail("qubit count must be in [1, 30]");
        doc.n_qubits = static_cast<int>(n);
        if (!cur.AtEnd()) cur.Fail("unexpected trailing input");
        expecting = Expecting::kNorm;
        break;
      }
      case Expecting::kNorm:
        cur.ExpectWord("norm");
        doc.norm = cur.ParseCoefficient();
        if (doc.norm.numerator == 0) cur.Fail("norm must be nonzero");
        if (!cur.AtEnd()) cur.Fail("unexpected trailing input");
        expecting = Expecting::kTerms;
        break;
      case Expecting::kTerms:
        doc.terms.push_back(ParseTerm(cur, line_no));
        CheckCoverage(doc.terms.back(), static_cast<int>(doc.terms.size()), doc.n_qubits);
        break;
    }
  }
  if (expecting != Expecting::kTerms || doc.terms.empty()) {
    const char* missing = expecting == Expecting::kState  ? "missing 'state' header"
                          : expecting == Expecting::kNorm ? "missing 'norm' line"
                                                          : "document has no terms";
    throw SyntaxError(line_no, 1, missing);
  }
  return doc;
}

SdlExpansion ExpandTerms(const SdlDocument& doc) {
  SdlExpansion out;
  out.n_qubits = doc.n_qubits;

  // Bring every term coefficient over a common radicand L; the term's
  // integer multiplier is then sqrt(L / radicand), which must be exact.
  int64_t common = 1;
  bool exact = true;
  for (const auto& term : doc.terms) {
    common = std::lcm(common, term.coefficient.radicand);
    if (common > (int64_t{1} << 40)) exact = false;
  }
  std::vector<int64_t> multipliers;
  for (const auto& term : doc.terms) {
    if (!exact) break;
    int64_t root = ExactSqrt(common / term.coefficient.radicand);
    if (root < 0) exact = false;
    multipliers.push_back(root);
  }
  std::map<BasisIndex, __int128> numerators;

  const double norm = doc.norm.Value();
  for (size_t t = 0; t < doc.terms.size(); ++t) {
    const SdlTerm& term = doc.terms[t];
    const double term_value = norm * term.coefficient.Value();
    // Odometer over one ket per block.
    std::vector<size_t> pick(term.blocks.size(), 0);
    while (true) {
      BasisIndex index = 0;
      int sign = 1;
      for (size_t b = 0; b < term.blocks.size(); ++b) {
        const SdlBlock& block = term.blocks[b];
        const SdlKet& ket = block.kets[pick[b]];
        sign *= ket.sign;
        for (size_t j = 0; j < ket.bits.size(); ++j) {
          if (ket.bits[j] == '1') index |= QubitBit(block.qubits[j], doc.n_qubits);
        }
      }
      out.amplitudes[index] += sign * term_value;
      if (exact) {
        numerators[index] += static_cast<__int128>(sign) * doc.norm.numerator *
                             term.coefficient.numerator * multipliers[t];
      }
      size_t b = 0;
      while (b < pick.size() && ++pick[b] == term.blocks[b].kets.size()) pick[b++] = 0;
      if (b == pick.size()) break;
    }
  }

  if (exact) {
    __int128 scale = static_cast<__int128>(doc.norm.radicand) * common;
    bool fits = scale <= INT64_MAX;
    std::map<BasisIndex, int64_t> narrow;
    for (const auto& [index, c] : numerators) {
      if (c > INT64_MAX || c < INT64_MIN) fits = false;
      narrow[index] = static_cast<int64_t>(c);
    }
    if (fits) {
      out.numerators = std::move(narrow);
      out.scale = static_cast<int64_t>(scale);
    }
  }
  return out;
}

PureState Expand(const SdlDocument& doc, bool normalize) {
  SdlExpansion expansion = ExpandTerms(doc);
  if (expansion.numerators) {
    std::vector<std::pair<BasisIndex, int64_t>> entries(expansion.numerators->begin(),
                                                        expansion.numerators->end());
    return PureState::FromExact(doc.n_qubits, std::move(entries), expansion.scale, normalize);
  }
  std::vector<std::pair<BasisIndex, Complex>> entries;
  for (const auto& [index, value] : expansion.amplitudes) entries.emplace_back(index, value);
  return PureState::FromAmplitudes(doc.n_qubits, std::move(entries), normalize);
}

std::string StateToSdl(const PureState& psi) {
  if (!psi.is_exact()) {
    throw Error(ErrorCode::kInvalidArgument, "only exact states can be written as SDL");
  }
  std::ostringstream out;
  out << "state " << psi.n_qubits() << "\n";
  out << "norm 1/sqrt(" << psi.exact_scale() << ")\n";
  std::string labels;
  for (int q = 1; q <= psi.n_qubits(); ++q) {
    if (q > 1) labels += ",";
    labels += std::to_string(q);
  }
  for (const auto& [index, amp] : psi.entries()) {
    int64_t c = amp.exact->numerator;
    out << "term";
    if (c != 1 && c != -1) out << " " << (c < 0 ? -c : c);
    out << ": block(" << labels << "){" << (c < 0 ? "-" : "")
        << IndexToBitstring(index, psi.n_qubits()) << "}\n";
  }
  return out.str();
}

bool LooksLikeSdl(std::string_view text) { return FirstToken(text, "state"); }

}  // namespace kuniform
