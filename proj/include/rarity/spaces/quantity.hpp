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

#ifndef RARITY_SPACES_QUANTITY_HPP_
#define RARITY_SPACES_QUANTITY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rarity/xprec/xreal.hpp"

namespace rarity::spaces {

using xprec::Precision;
using xprec::XReal;

enum class LogBase { two, ten };

/// base^exponent. `pi` factors ignore `base`.
struct Factor {
  enum class Kind { integer, pi };
  Kind kind = Kind::integer;
  mpz_class base = 1;
  std::int64_t exponent = 1;
};

/// Size of a space as a product of exact factors, or a bare log2 value when
/// only the magnitude is known. Never expands the product unless asked to.
class Quantity {
 public:
  static Quantity integer(const mpz_class& value);
  static Quantity integer(std::string_view decimal);
  /// base^exponent with base >= 2. Negative exponents express ratios.
  static Quantity power(const mpz_class& base, std::int64_t exponent);
  static Quantity pi_power(std::int64_t exponent);
  static Quantity from_log2(XReal log2_value);

  /// Product. Throws DomainError if either side is a bare log2 value.
  Quantity operator*(const Quantity& other) const;

  bool is_log_literal() const { return log2_literal_.has_value(); }
  const std::vector<Factor>& factors() const { return factors_; }
  const std::optional<XReal>& log2_literal() const { return log2_literal_; }

  /// Approximate decimal digit count of the value.
  double digit_estimate() const;

  /// The exact integer, when the quantity is an integer product with at most
  /// `max_digits` digits; nullopt otherwise.
  std::optional<mpz_class> materialize(std::uint64_t max_digits = 10'000'000) const;

 private:
  std::vector<Factor> factors_;
  std::optional<XReal> log2_literal_;
};

/// Sum of exponent * log(base) over factors, at precision >= 32 digits.
XReal quantity_log(const Quantity& q, LogBase base, Precision prec = Precision{40});

}  // namespace rarity::spaces

#endif  // RARITY_SPACES_QUANTITY_HPP_
