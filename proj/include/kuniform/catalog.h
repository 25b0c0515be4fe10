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

#ifndef KUNIFORM_CATALOG_H_
#define KUNIFORM_CATALOG_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kuniform/uniformity.h"

namespace kuniform {

struct CatalogEntry {
  std::string id;
  std::string sdl;
  int claimed_k = 1;
  std::string source;
  // When nonzero, verification also attaches the purity table of this size.
  int table_size = 0;
  std::vector<std::string> notes;
};

const std::vector<CatalogEntry>& CatalogEntries();

// Throws UnknownId.
const CatalogEntry& CatalogGet(std::string_view id);

PureState CatalogState(std::string_view id);

struct CatalogResult {
  std::string id;
  int claimed_k = 0;
  int support_size = 0;
  std::optional<UniformityReport> report;
  std::vector<PurityRow> table;
  // Set when the entry could not be expanded or checked at all.
  std::optional<std::string> error;
};

// Checks every entry at its claimed k with exact arithmetic where possible.
// Failing entries are recorded, never thrown.
std::vector<CatalogResult> CatalogVerifyAll(double tolerance, int threads = 1);

nlohmann::ordered_json CatalogResultsToJson(const std::vector<CatalogResult>& results);

}  // namespace kuniform

#endif  // KUNIFORM_CATALOG_H_
