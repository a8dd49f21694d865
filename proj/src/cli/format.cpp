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

#include "rarity/cli/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace rarity::cli {

std::string format_magnitude(const LogMagnitude& m, int digits) {
  if (m.is_zero()) return "0";
  return m.scientific(digits).str();
}

std::string format_significant(const XReal& x, int significant) {
  if (x.is_zero()) return "0";
  const double mag = std::abs(x.to_double());
  const int int_digits = static_cast<int>(std::floor(std::log10(mag))) + 1;
  return x.to_fixed(std::max(0, significant - int_digits));
}

std::string format_log10(const LogMagnitude& m, int significant) {
  if (m.is_zero()) return "-inf";
  return format_significant(m.log10(), significant);
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string stamp(int precision, std::uint64_t seed) {
  return "rarity " + std::string(kVersion) + " precision=" + std::to_string(precision) +
         " seed=" + std::to_string(seed);
}

}  // namespace rarity::cli
