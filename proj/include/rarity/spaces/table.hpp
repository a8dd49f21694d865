// Copyright 2026 The Rarity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef RARITY_SPACES_TABLE_HPP_
#define RARITY_SPACES_TABLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rarity/spaces/scenarios.hpp"

namespace rarity::spaces {

enum class TableFormat { markdown, csv, plain };

/// Parses "markdown", "csv" or "plain"; throws std::invalid_argument.
TableFormat parse_table_format(std::string_view text);

/// Largest tolerated |recomputed - published| in log2.
inline constexpr double kMismatchTolerance = 0.05;

struct TableRow {
  std::string id;
  std::string description;
  XReal log2;
  XReal log10;
  std::string published_order;
  Provenance provenance;
  /// Formula value, or the side-by-side recomputation of a literal row.
  std::optional<XReal> recomputed_log2;
  bool mismatch;
  std::vector<std::string> notes;
};

/// Rows sorted by descending log2 (ties by id).
std::vector<TableRow> table_rows(const std::vector<Scenario>& registry);

/// Throws DomainError on an empty registry.
std::string render_table(const std::vector<Scenario>& registry, TableFormat format);

}  // namespace rarity::spaces

#endif  // RARITY_SPACES_TABLE_HPP_
