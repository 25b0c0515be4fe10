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

#include "kuniform/catalog.h"

#include "kuniform/error.h"
#include "kuniform/sdl.h"

namespace kuniform {
namespace {

// Transcriptions keep the printed grouping: one term per printed summand,
// one block per printed subscript group, qubit labels in printed order.

constexpr std::string_view kPsi11 = R"(# 11 qubits. Complementary pairs on qubits 3,4,6,7 times complementary
# pairs on 1,2,5,8,9,10,11; overall factor 1/(4 sqrt 2).
state 11
norm 1/sqrt(32)
term: block(3,4,6,7){0000 + 1111} * block(1,2,5,8,9,10,11){0000000 + 1111111}
term: block(3,4,6,7){0001 + 1110} * block(1,2,5,8,9,10,11){0111010 + 1000101}
term: block(3,4,6,7){0010 + 1101} * block(1,2,5,8,9,10,11){0110101 + 1001010}
term: block(3,4,6,7){0011 + 1100} * block(1,2,5,8,9,10,11){0001111 + 1110000}
term: block(3,4,6,7){0100 + 1011} * block(1,2,5,8,9,10,11){0101100 + 1010011}
term: block(3,4,6,7){0101 + 1010} * block(1,2,5,8,9,10,11){0010110 + 1101001}
term: block(3,4,6,7){0110 + 1001} * block(1,2,5,8,9,10,11){0011001 + 1100110}
term: block(3,4,6,7){0111 + 1000} * block(1,2,5,8,9,10,11){0100011 + 1011100}
)";

constexpr std::string_view kPsi12 = R"(# 12 qubits, same layout as the 11-qubit state with qubit 12 appended
# to the second group.
state 12
norm 1/sqrt(32)
term: block(3,4,6,7){0000 + 1111} * block(1,2,5,8,9,10,11,12){00000000 + 11111111}
term: block(3,4,6,7){0001 + 1110} * block(1,2,5,8,9,10,11,12){01110100 + 10001011}
term: block(3,4,6,7){0010 + 1101} * block(1,2,5,8,9,10,11,12){01101010 + 10010101}
term: block(3,4,6,7){0011 + 1100} * block(1,2,5,8,9,10,11,12){00011110 + 11100001}
term: block(3,4,6,7){0100 + 1011} * block(1,2,5,8,9,10,11,12){01011001 + 10100110}
term: block(3,4,6,7){0101 + 1010} * block(1,2,5,8,9,10,11,12){00101101 + 11010010}
term: block(3,4,6,7){0110 + 1001} * block(1,2,5,8,9,10,11,12){00110011 + 11001100}
term: block(3,4,6,7){0111 + 1000} * block(1,2,5,8,9,10,11,12){01000111 + 10111000}
)";

// In the printed 13/14/15-qubit states the first ket of the |0000> group is
// one digit short; it is the all-zero word of the block width.
constexpr std::string_view kPsi13 = R"(# 13 qubits. Even-weight heads on qubits 1,2,8,11, each times four kets on
# 3,4,5,6,7,9,10,12,13.
state 13
norm 1/sqrt(32)
term: block(1,2,8,11){0000} * block(3,4,5,6,7,9,10,12,13){000000000 + 011011110 + 101101111 + 110110001}
term: block(1,2,8,11){0011} * block(3,4,5,6,7,9,10,12,13){000111101 + 011100011 + 101010010 + 110001100}
term: block(1,2,8,11){0101} * block(3,4,5,6,7,9,10,12,13){001101000 + 010110110 + 100000111 + 111011001}
term: block(1,2,8,11){0110} * block(3,4,5,6,7,9,10,12,13){001010101 + 010001011 + 100111010 + 111100100}
term: block(1,2,8,11){1001} * block(3,4,5,6,7,9,10,12,13){000011011 + 011000101 + 101110100 + 110101010}
term: block(1,2,8,11){1010} * block(3,4,5,6,7,9,10,12,13){000100110 + 011111000 + 101001001 + 110010111}
term: block(1,2,8,11){1100} * block(3,4,5,6,7,9,10,12,13){001110011 + 010101101 + 100011100 + 111000010}
term: block(1,2,8,11){1111} * block(3,4,5,6,7,9,10,12,13){001001110 + 010010000 + 100100001 + 111111111}
)";

constexpr std::string_view kPsi14 = R"(# 14 qubits, heads on 1,2,8,11, tails on 3,4,5,6,7,9,10,12,13,14.
state 14
norm 1/sqrt(32)
term: block(1,2,8,11){0000} * block(3,4,5,6,7,9,10,12,13,14){0000000000 + 0110111101 + 1011011110 + 1101100011}
term: block(1,2,8,11){0011} * block(3,4,5,6,7,9,10,12,13,14){0001111011 + 0111000110 + 1010100101 + 1100011000}
term: block(1,2,8,11){0101} * block(3,4,5,6,7,9,10,12,13,14){0011010001 + 0101101100 + 1000001111 + 1110110010}
term: block(1,2,8,11){0110} * block(3,4,5,6,7,9,10,12,13,14){0010101010 + 0100010111 + 1001110100 + 1111001001}
term: block(1,2,8,11){1001} * block(3,4,5,6,7,9,10,12,13,14){0000110110 + 0110001011 + 1011101000 + 1101010101}
term: block(1,2,8,11){1010} * block(3,4,5,6,7,9,10,12,13,14){0001001101 + 0111110000 + 1010010011 + 1100101110}
term: block(1,2,8,11){1100} * block(3,4,5,6,7,9,10,12,13,14){0011100111 + 0101011010 + 1000111001 + 1110000100}
term: block(1,2,8,11){1111} * block(3,4,5,6,7,9,10,12,13,14){0010011100 + 0100100001 + 1001000010 + 1111111111}
)";

constexpr std::string_view kPsi15 = R"(# 15 qubits, heads on 1,2,8,11, tails on 3,4,5,6,7,9,10,12,13,14,15.
state 15
norm 1/sqrt(32)
term: block(1,2,8,11){0000} * block(3,4,5,6,7,9,10,12,13,14,15){00000000000 + 01101111010 + 10110111101 + 11011000111}
term: block(1,2,8,11){0011} * block(3,4,5,6,7,9,10,12,13,14,15){00011110110 + 01110001100 + 10101001011 + 11000110001}
term: block(1,2,8,11){0101} * block(3,4,5,6,7,9,10,12,13,14,15){00110100011 + 01011011001 + 10000011110 + 11101100100}
term: block(1,2,8,11){0110} * block(3,4,5,6,7,9,10,12,13,14,15){00101010101 + 01000101111 + 10011101000 + 11110010010}
term: block(1,2,8,11){1001} * block(3,4,5,6,7,9,10,12,13,14,15){00001101101 + 01100010111 + 10111010000 + 11010101010}
term: block(1,2,8,11){1010} * block(3,4,5,6,7,9,10,12,13,14,15){00010011011 + 01111100001 + 10100100110 + 11001011100}
term: block(1,2,8,11){1100} * block(3,4,5,6,7,9,10,12,13,14,15){00111001110 + 01010110100 + 10001110011 + 11100001001}
term: block(1,2,8,11){1111} * block(3,4,5,6,7,9,10,12,13,14,15){00100111000 + 01001000010 + 10010000101 + 11111111111}
)";

// Each printed bracket [(a + b)|0> + (c + d)|1>] on three qubits plus a
// fourth is written as the four distributed kets, signs as printed.
constexpr std::string_view kPsiM8 = R"(# 8 qubits, signed. Prefactor 1/8. Four products [qubits 1-4][qubits 5-8].
state 8
norm 1/sqrt(64)
# [(000+111)0 + (010+101)1] [(000-111)0 + (000-111)1]
term: block(1,2,3,4){0000 + 1110 + 0101 + 1011} * block(5,6,7,8){0000 - 1110 + 0001 - 1111}
# [(001+110)0 + (000-111)1] [(000+111)0 + (100+011)1]
term: block(1,2,3,4){0010 + 1100 + 0001 - 1111} * block(5,6,7,8){0000 + 1110 + 1001 + 0111}
# [(010+101)0 + (100+011)1] [(000+111)0 - (010+101)1]
term: block(1,2,3,4){0100 + 1010 + 1001 + 0111} * block(5,6,7,8){0000 + 1110 - 0101 - 1011}
# [(000-111)0 + (010-101)1] [(000-111)0 + (100-101)1]
term: block(1,2,3,4){0000 - 1110 + 0101 - 1011} * block(5,6,7,8){0000 - 1110 + 1001 - 1011}
)";

constexpr std::string_view kBell = R"(state 2
norm 1/sqrt(2)
term: block(1,2){00 + 11}
)";

constexpr std::string_view kGhz3 = R"(state 3
norm 1/sqrt(2)
term: block(1,2,3){000 + 111}
)";

constexpr std::string_view kGhz4 = R"(state 4
norm 1/sqrt(2)
term: block(1,2,3,4){0000 + 1111}
)";

std::vector<CatalogEntry> BuildEntries() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string id, std::string_view sdl, int k, std::string source) {
    entries.push_back(CatalogEntry{std::move(id), std::string(sdl), k, std::move(source), 0, {}});
  };
  add("psi11", kPsi11, 3, "3-uniform 11-qubit state from paired complementary kets");
  add("psi12", kPsi12, 3, "3-uniform 12-qubit state from paired complementary kets");
  add("psi13", kPsi13, 3, "3-uniform 13-qubit state from even-weight heads");
  add("psi14", kPsi14, 3, "3-uniform 14-qubit state from even-weight heads");
  add("psi15", kPsi15, 3, "3-uniform 15-qubit state from even-weight heads");
  add("psiM8", kPsiM8, 3, "signed 8-qubit state claimed 3-uniform, with its 4-qubit purity list");
  entries.back().table_size = 4;
  entries.back().notes.push_back(
      "the triple purities accompanying this state are printed with labels running to "
      "qubit 11; the check covers the 56 triples of its 8 qubits");
  add("bell", kBell, 1, "two-qubit Bell state");
  add("ghz3", kGhz3, 1, "three-qubit GHZ state");
  add("ghz4", kGhz4, 1, "four-qubit GHZ state");
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& CatalogEntries() {
  static const std::vector<CatalogEntry> entries = BuildEntries();
  return entries;
}

const CatalogEntry& CatalogGet(std::string_view id) {
  for (const auto& entry : CatalogEntries()) {
    if (entry.id == id) return entry;
  }
  throw Error(ErrorCode::kUnknownId, "no catalog entry '" + std::string(id) + "'");
}

PureState CatalogState(std::string_view id) { return Expand(ParseSdl(CatalogGet(id).sdl)); }

std::vector<CatalogResult> CatalogVerifyAll(double tolerance, int threads) {
  std::vector<CatalogResult> results;
  for (const auto& entry : CatalogEntries()) {
    CatalogResult result;
    result.id = entry.id;
    result.claimed_k = entry.claimed_k;
    try {
      const PureState psi = Expand(ParseSdl(entry.sdl));
      result.support_size = static_cast<int>(psi.support_size());
      UniformityOptions options;
      options.k = entry.claimed_k;
      options.tolerance = tolerance;
      options.threads = threads;
      UniformityReport report = CheckUniformity(psi, options);
      report.notes.insert(report.notes.end(), entry.notes.begin(), entry.notes.end());
      result.report = std::move(report);
      if (entry.table_size > 0) result.table = PurityTable(psi, entry.table_size, threads);
    } catch (const Error& e) {
      result.error = e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

nlohmann::ordered_json CatalogResultsToJson(const std::vector<CatalogResult>& results) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["claimed_k"] = r.claimed_k;
    j["support_size"] = r.support_size;
    j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
    j["report"] = r.report ? ReportToJson(*r.report) : nlohmann::ordered_json(nullptr);
    if (!r.table.empty()) {
      j["purity_table"] = PurityTableToJson(r.table, r.report && r.report->exact);
    }
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace kuniform
