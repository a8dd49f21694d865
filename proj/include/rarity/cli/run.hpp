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

#ifndef RARITY_CLI_RUN_HPP_
#define RARITY_CLI_RUN_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rarity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Returns 0 on success,
/// 2 on a usage error (unknown subcommand or flag, malformed or out-of-range
/// value) and 1 when the computation itself fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rarity::cli

#endif  // RARITY_CLI_RUN_HPP_
