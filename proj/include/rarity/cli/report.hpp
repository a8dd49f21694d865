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

#ifndef RARITY_CLI_REPORT_HPP_
#define RARITY_CLI_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rarity::cli {

struct ReportConfig {
  std::filesystem::path out_dir;
  int precision = 64;
  std::uint64_t seed = 42;
  unsigned workers = 1;            // never affects output bytes
  std::vector<std::string> corpus;  // paths or glob patterns; empty skips the audio section
  double epsilon = 0.1;
  std::uint64_t trials = 1'000'000;  // Monte Carlo check of the n = 10 tail
};

/// One manifest entry. `log10` is empty when not meaningful.
struct HeadlineValue {
  std::string name;
  std::string value;
  std::string log10;
  std::string provenance;  // paper, derived or calibrated
  std::string note;
};

struct Artifact {
  std::string file;
  std::string sha256;
};

struct ReportBundle {
  std::filesystem::path dir;
  std::vector<HeadlineValue> values;
  std::vector<std::string> discrepancies;
  std::vector<Artifact> artifacts;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Writes fig1.csv/.svg, fig2.csv/.svg, table1.md/.csv, corpus.csv (with a
/// corpus) and manifest.json into out_dir. Files are staged next to out_dir
/// and moved in only when every artifact succeeded; on failure nothing is
/// left behind and the error propagates.
ReportBundle write_report(const ReportConfig& config);

}  // namespace rarity::cli

#endif  // RARITY_CLI_REPORT_HPP_
