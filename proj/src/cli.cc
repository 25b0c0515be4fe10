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

#include "kuniform/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuniform/catalog.h"
#include "kuniform/error.h"
#include "kuniform/invariants.h"
#include "kuniform/oa.h"
#include "kuniform/phase_search.h"
#include "kuniform/sdl.h"
#include "kuniform/state_io.h"
#include "kuniform/uniformity.h"

namespace kuniform {
namespace {

using nlohmann::ordered_json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write '" + path + "'");
  file << text;
}

PureState LoadState(const std::string& path, std::istream& in, bool normalize) {
  const std::string text = ReadInput(path, in);
  if (LooksLikeSdl(text)) return Expand(ParseSdl(text), normalize);
  if (LooksLikePlainState(text)) return ParsePlainState(text, normalize);
  throw Error(ErrorCode::kInvalidArgument,
              "'" + path + "' is neither SDL ('state N') nor a plain state ('nqubits N')");
}

int LargestFeasibleStrength(const OrthogonalArray& array) {
  int t = 0;
  while (t < array.factors() && (int64_t{2} << t) <= array.runs()) ++t;
  return t;
}

struct VerifyArgs {
  std::string path;
  int k = 1;
  bool json = false;
  bool exact = false;
  bool floating = false;
  bool all_sizes = false;
  bool normalize = false;
  double tolerance = kDefaultTolerance;
  int threads = 1;
};

int RunVerify(const VerifyArgs& a, Streams io) {
  const PureState psi = LoadState(a.path, io.in, a.normalize);
  UniformityOptions options;
  options.k = a.k;
  options.mode = a.all_sizes ? CheckMode::kAllSizes : CheckMode::kSizeKOnly;
  options.tolerance = a.tolerance;
  options.threads = a.threads;
  options.arithmetic = a.exact ? Arithmetic::kExact : a.floating ? Arithmetic::kFloat
                                                                 : Arithmetic::kAuto;
  const UniformityReport report = CheckUniformity(psi, options);
  if (a.json) {
    io.out << ReportToJson(report).dump(2) << "\n";
  } else {
    io.out << ReportToText(report);
  }
  return report.is_k_uniform ? kExitPass : kExitFail;
}

struct InvariantsArgs {
  std::string path;
  int max_size = 3;
  std::vector<int> subset;
  bool json = false;
  bool normalize = false;
  int threads = 1;
};

int RunInvariants(const InvariantsArgs& a, Streams io) {
  const PureState psi = LoadState(a.path, io.in, a.normalize);
  const bool exact = psi.is_exact();
  std::vector<FValue> values;
  std::optional<QubitSubset> only;
  if (!a.subset.empty()) {
    only = QubitSubset::Create(a.subset, psi.n_qubits());
    values.push_back(ComputeFValue(psi, *only));
  } else {
    const int top = std::min(a.max_size, psi.n_qubits());
    const FTable table(psi, top, a.threads);
    for (int size = 1; size <= top; ++size) {
      for (const auto& s : Combinations(psi.n_qubits(), size)) values.push_back(table.Get(s));
    }
  }
  auto value_json = [&](const FValue& f) -> ordered_json {
    if (exact) return {{"num", f.exact->num()}, {"den", f.exact->den()}};
    return f.value;
  };
  if (a.json) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["n_qubits"] = psi.n_qubits();
    j["mode"] = exact ? "exact" : "float";
    ordered_json list = ordered_json::array();
    for (const auto& f : values) {
      list.push_back({{"subset", f.subset.labels()}, {"f", value_json(f)}});
    }
    j["f_values"] = std::move(list);
    if (only) {
      const Purity p = PurityViaInvariants(psi, *only);
      j["purity_via_invariants"] = PurityToJson(p, exact);
    }
    io.out << j.dump(2) << "\n";
    return kExitPass;
  }
  size_t zeros = 0;
  for (const auto& f : values) {
    const bool zero = exact ? f.exact->IsZero() : f.value < 1e-12;
    if (zero && !only) {
      ++zeros;
      continue;
    }
    io.out << "F" << f.subset.ToString() << " = "
           << (exact ? f.exact->ToString() : std::to_string(f.value)) << "\n";
  }
  if (!only) io.out << zeros << " of " << values.size() << " F-values vanish\n";
  if (only) {
    const Purity p = PurityViaInvariants(psi, *only);
    io.out << "purity" << only->ToString() << " = "
           << (exact ? p.exact->ToString() : std::to_string(p.value)) << "\n";
  }
  return kExitPass;
}

struct OaCheckArgs {
  std::string path;
  std::optional<int> strength;
  std::vector<int> irredundant;
  bool json = false;
};

int RunOaCheck(const OaCheckArgs& a, Streams io) {
  const OrthogonalArray array = ParseOa(ReadInput(a.path, io.in));
  const int bound = a.strength.value_or(LargestFeasibleStrength(array));
  const StrengthResult strength = OaStrength(array, bound);
  bool pass = !a.strength || strength.strength >= *a.strength;

  std::vector<IrredundancyResult> irr;
  for (int k : a.irredundant) {
    irr.push_back(OaIrredundant(array, k));
    pass = pass && irr.back().irredundant;
  }
  const bool linear = IsLinear(array);
  std::optional<int> dual;
  if (linear && array.factors() <= 20) dual = DualMinimumDistance(array);

  if (a.json) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["runs"] = array.runs();
    j["factors"] = array.factors();
    j["strength_bound"] = bound;
    j["strength"] = StrengthToJson(strength);
    ordered_json list = ordered_json::array();
    for (size_t i = 0; i < irr.size(); ++i) {
      list.push_back(IrredundancyToJson(a.irredundant[i], irr[i], array));
    }
    j["irredundancy"] = std::move(list);
    j["linear"] = linear;
    j["dual_distance"] = dual ? ordered_json(*dual) : ordered_json(nullptr);
    j["pass"] = pass;
    io.out << j.dump(2) << "\n";
  } else {
    io.out << "array: " << array.runs() << " rows x " << array.factors() << " columns\n";
    io.out << "strength: " << strength.strength << " (checked up to " << bound << ")\n";
    if (strength.witness) {
      const auto& w = *strength.witness;
      io.out << "  witness: columns " << w.columns.ToString() << " pattern "
             << IndexToBitstring(w.pattern, w.columns.size()) << " observed " << w.observed
             << " expected " << w.expected << "\n";
    }
    for (size_t i = 0; i < irr.size(); ++i) {
      io.out << "irredundant at k = " << a.irredundant[i] << ": "
             << (irr[i].irredundant ? "yes" : "no") << "\n";
      if (irr[i].witness) {
        const auto& w = *irr[i].witness;
        io.out << "  witness: dropping columns " << w.dropped.ToString() << " makes rows "
               << w.first_row + 1 << " (" << array.RowString(w.first_row) << ") and "
               << w.second_row + 1 << " (" << array.RowString(w.second_row) << ") collide\n";
      }
    }
    if (linear) {
      io.out << "linear code";
      if (dual) io.out << ", dual distance " << *dual;
      io.out << "\n";
    }
    io.out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

struct OaToStateArgs {
  std::string path;
  std::string signs_path;
  std::string format = "sdl";
};

int RunOaToState(const OaToStateArgs& a, Streams io) {
  const OrthogonalArray array = ParseOa(ReadInput(a.path, io.in));
  std::optional<SignVector> signs;
  if (!a.signs_path.empty()) signs = SignVector::Parse(ReadInput(a.signs_path, io.in));
  const PureState psi = StateFromOa(array, signs);
  io.out << (a.format == "plain" ? WritePlainState(psi) : StateToSdl(psi));
  return kExitPass;
}

struct StateToOaArgs {
  std::string path;
  std::string signs_out;
  bool support_only = false;
  bool normalize = false;
};

int RunStateToOa(const StateToOaArgs& a, Streams io) {
  const PureState psi = LoadState(a.path, io.in, a.normalize);
  OrthogonalArray array = SupportArray(psi);
  if (!a.support_only) {
    SignedArray signed_array = OaFromState(psi);
    array = signed_array.array;
    if (!a.signs_out.empty()) WriteFile(a.signs_out, signed_array.signs.ToString() + "\n");
  }
  io.out << WriteOa(array, OaStrength(array, LargestFeasibleStrength(array)).strength);
  return kExitPass;
}

struct SearchArgs {
  std::string path;
  int k = 1;
  int restarts = 16;
  uint64_t seed = 0;
  int limit = kDefaultExhaustiveBits;
  std::string method = "auto";
  std::string signs_out;
  bool json = false;
  int threads = 1;
};

int RunSearch(const SearchArgs& a, Streams io) {
  const OrthogonalArray array = ParseOa(ReadInput(a.path, io.in));
  const bool exhaustive =
      a.method == "exhaustive" || (a.method == "auto" && array.runs() - 1 <= a.limit);
  const SearchOutcome outcome = exhaustive
                                    ? SearchExhaustive(array, a.k, a.limit, a.threads)
                                    : SearchLocal(array, a.k, a.restarts, a.seed);
  if (!a.signs_out.empty()) WriteFile(a.signs_out, outcome.best_signs.ToString() + "\n");
  if (a.json) {
    io.out << SearchOutcomeToJson(outcome).dump(2) << "\n";
  } else {
    io.out << "method: " << (exhaustive ? "exhaustive" : "local")
           << (outcome.certificate ? " (global minimum certified)" : "") << "\n";
    io.out << "objective: " << outcome.objective << " after " << outcome.evaluations
           << " evaluations\n";
    io.out << "signs: " << outcome.best_signs.ToString() << "\n";
    io.out << (outcome.achieved_k_uniform ? "k-uniform signing found" : "no k-uniform signing found")
           << "\n";
  }
  return outcome.achieved_k_uniform ? kExitPass : kExitFail;
}

struct CatalogArgs {
  std::string id;
  bool json = false;
  double tolerance = kDefaultTolerance;
  int threads = 1;
};

int RunCatalogList(Streams io) {
  for (const auto& entry : CatalogEntries()) {
    const SdlDocument doc = ParseSdl(entry.sdl);
    io.out << entry.id << "\t" << doc.n_qubits << " qubits\tk=" << entry.claimed_k << "\t"
           << entry.source << "\n";
  }
  return kExitPass;
}

int RunCatalogVerifyAll(const CatalogArgs& a, Streams io) {
  const auto results = CatalogVerifyAll(a.tolerance, a.threads);
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.report && r.report->is_k_uniform;
  if (a.json) {
    io.out << CatalogResultsToJson(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      io.out << r.id << ": ";
      if (r.error) {
        io.out << "error: " << *r.error << "\n";
        continue;
      }
      size_t passed = 0;
      for (const auto& v : r.report->verdicts) passed += v.pass;
      io.out << (r.report->is_k_uniform ? "" : "NOT ") << r.claimed_k << "-uniform ("
             << passed << "/" << r.report->verdicts.size() << " subsets, "
             << (r.report->exact ? "exact" : "float") << ")";
      if (!r.report->witnesses.empty()) {
        io.out << ", " << r.report->witnesses.size() << " minimal witnesses of size "
               << r.report->witnesses.front().size();
      }
      io.out << "\n";
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"k-uniform state verifier and constructor", "kuniform"};
  app.require_subcommand(1);

  auto positive = CLI::PositiveNumber;

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check k-uniformity of a state file");
  verify_cmd->add_option("state", verify.path, "SDL or plain state file, '-' for stdin")->required();
  verify_cmd->add_option("--k", verify.k, "uniformity level")->required()->check(positive);
  verify_cmd->add_flag("--json", verify.json, "emit the JSON report");
  auto* exact_flag = verify_cmd->add_flag("--exact", verify.exact, "require exact arithmetic");
  verify_cmd->add_flag("--float", verify.floating, "force floating arithmetic")->excludes(exact_flag);
  verify_cmd->add_flag("--all-sizes", verify.all_sizes, "also report every smaller subset");
  verify_cmd->add_flag("--normalize", verify.normalize, "renormalize the input");
  verify_cmd->add_option("--tolerance", verify.tolerance, "float-mode tolerance")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify.threads)->check(positive);

  InvariantsArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "list Pauli-correlation invariants F_T");
  inv_cmd->add_option("state", inv.path)->required();
  inv_cmd->add_option("--max-size", inv.max_size, "largest subset size")
      ->check(CLI::Range(1, kMaxInvariantSubset));
  inv_cmd->add_option("--subset", inv.subset, "one subset, comma separated")->delimiter(',');
  inv_cmd->add_flag("--json", inv.json);
  inv_cmd->add_flag("--normalize", inv.normalize);
  inv_cmd->add_option("--threads", inv.threads)->check(positive);

  auto* oa_cmd = app.add_subcommand("oa", "orthogonal array tools");
  oa_cmd->require_subcommand(1);
  OaCheckArgs oa_check;
  auto* oa_check_cmd = oa_cmd->add_subcommand("check", "strength and irredundancy");
  oa_check_cmd->add_option("array", oa_check.path)->required();
  oa_check_cmd->add_option("--strength", oa_check.strength, "required strength");
  oa_check_cmd->add_option("--irredundant", oa_check.irredundant, "irredundancy level(s)");
  oa_check_cmd->add_flag("--json", oa_check.json);
  OaToStateArgs oa_to_state;
  auto* oa_to_state_cmd = oa_cmd->add_subcommand("to-state", "equal superposition of the rows");
  oa_to_state_cmd->add_option("array", oa_to_state.path)->required();
  oa_to_state_cmd->add_option("--signs", oa_to_state.signs_path, "sign vector file");
  oa_to_state_cmd->add_option("--format", oa_to_state.format)
      ->check(CLI::IsMember({"sdl", "plain"}));

  auto* state_cmd = app.add_subcommand("state", "state conversions");
  state_cmd->require_subcommand(1);
  StateToOaArgs state_to_oa;
  auto* state_to_oa_cmd = state_cmd->add_subcommand("to-oa", "support rows as an array");
  state_to_oa_cmd->add_option("state", state_to_oa.path)->required();
  state_to_oa_cmd->add_option("--signs-out", state_to_oa.signs_out, "write the sign vector");
  state_to_oa_cmd->add_flag("--support-only", state_to_oa.support_only,
                            "accept unequal magnitudes, emit the support only");
  state_to_oa_cmd->add_flag("--normalize", state_to_oa.normalize);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "find a k-uniform signing of a support");
  search_cmd->add_option("support", search.path)->required();
  search_cmd->add_option("--k", search.k)->required()->check(CLI::Range(1, kMaxSearchK));
  search_cmd->add_option("--restarts", search.restarts)->check(positive);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--limit", search.limit, "exhaustive budget in bits")
      ->check(CLI::Range(0, 40));
  search_cmd->add_option("--method", search.method)
      ->check(CLI::IsMember({"auto", "exhaustive", "local"}));
  search_cmd->add_option("--signs-out", search.signs_out, "write the best sign vector");
  search_cmd->add_flag("--json", search.json);
  search_cmd->add_option("--threads", search.threads)->check(positive);

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in states");
  catalog_cmd->require_subcommand(1);
  CatalogArgs catalog;
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entries");
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "print an entry's SDL");
  emit_cmd->add_option("id", catalog.id)->required();
  auto* verify_all_cmd = catalog_cmd->add_subcommand("verify-all", "verify every entry");
  verify_all_cmd->add_flag("--json", catalog.json);
  verify_all_cmd->add_option("--tolerance", catalog.tolerance)->check(CLI::PositiveNumber);
  verify_all_cmd->add_option("--threads", catalog.threads)->check(positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (*verify_cmd) return RunVerify(verify, io);
    if (*inv_cmd) return RunInvariants(inv, io);
    if (*oa_check_cmd) return RunOaCheck(oa_check, io);
    if (*oa_to_state_cmd) return RunOaToState(oa_to_state, io);
    if (*state_to_oa_cmd) return RunStateToOa(state_to_oa, io);
    if (*search_cmd) return RunSearch(search, io);
    if (*list_cmd) return RunCatalogList(io);
    if (*emit_cmd) {
      out << CatalogGet(catalog.id).sdl;
      return kExitPass;
    }
    if (*verify_all_cmd) return RunCatalogVerifyAll(catalog, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace kuniform
