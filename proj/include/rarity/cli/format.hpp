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

#ifndef RARITY_CLI_FORMAT_HPP_
#define RARITY_CLI_FORMAT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "rarity/xprec/log_magnitude.hpp"

namespace rarity::cli {

using xprec::LogMagnitude;
using xprec::Precision;
using xprec::XReal;

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr int kDefaultDigits = 9;
inline constexpr int kDefaultPrecision = 64;
inline constexpr int kMinPrecision = 16;
inline constexpr std::uint64_t kDefaultSeed = 42;

/// "m.mmme-N" with `digits` significant digits, or "0".
std::string format_magnitude(const LogMagnitude& m, int digits = kDefaultDigits);

/// Fixed-point text carrying `significant` significant digits; "-inf" for a
/// zero magnitude.
std::string format_significant(const XReal& x, int significant);
std::string format_log10(const LogMagnitude& m, int significant = 20);

/// Shortest round-trip text of a double.
std::string format_double(double x);

/// "rarity <version> precision=<p> seed=<s>".
std::string stamp(int precision, std::uint64_t seed);

}  // namespace rarity::cli

#endif  // RARITY_CLI_FORMAT_HPP_
