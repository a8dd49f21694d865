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

#ifndef RARITY_DIRECTION_HPP_
#define RARITY_DIRECTION_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rarity {

/// Which side of a binomial threshold K a tail covers.
enum class Direction {
  upper,  // k >= K
  lower,  // k <= K
};

inline Direction parse_direction(std::string_view text) {
  if (text == "upper") return Direction::upper;
  if (text == "lower") return Direction::lower;
  throw std::invalid_argument("direction must be 'upper' or 'lower', got '" + std::string(text) +
                              "'");
}

inline std::string_view to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

}  // namespace rarity

#endif  // RARITY_DIRECTION_HPP_
