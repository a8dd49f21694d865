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

#ifndef RARITY_XPREC_LOG_MAGNITUDE_HPP_
#define RARITY_XPREC_LOG_MAGNITUDE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "rarity/xprec/xreal.hpp"

namespace rarity::xprec {

/// Decimal scientific notation: mantissa digits in [1, 10) and an exact
/// integer exponent. Renders like "4.1484712e-9474".
struct Scientific {
  std::string mantissa;  // "4.1484712"
  std::int64_t exponent = 0;

  std::string str() const;
};

/// Rounds a positive value m * 10^e (given as the decimal digits of a
/// rounded integer) into a Scientific with trailing zeros stripped.
Scientific make_scientific(const mpz_class& rounded_digits, int significant,
                           std::int64_t exponent);

/// A non-negative quantity held as its base-10 logarithm, so values such as
/// 10^-9474 never touch a hardware float. The exact zero has no logarithm
/// and is marked separately.
class LogMagnitude {
 public:
  static LogMagnitude zero(Precision prec = {});
  /// The quantity 1 (log10 = 0).
  static LogMagnitude one(Precision prec = {});
  static LogMagnitude from_log10(XReal log10_value);
  /// From a natural logarithm; exp() of arguments far beyond any float range
  /// goes through here.
  static LogMagnitude from_ln(const XReal& ln_value);
  /// From a non-negative value.
  static LogMagnitude from_value(const XReal& value);

  bool is_zero() const { return zero_; }
  /// log10 of the quantity. Meaningless when is_zero().
  const XReal& log10() const { return log10_; }
  Precision precision() const { return log10_.precision(); }

  /// The quantity itself (0 when is_zero()).
  XReal value() const;

  /// Mantissa rounded to `significant` digits, trailing zeros stripped.
  Scientific scientific(int significant = 9) const;

  /// Product of two quantities.
  friend LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b);
  /// Quotient; throws DomainError when dividing by zero.
  friend LogMagnitude operator/(const LogMagnitude& a, const LogMagnitude& b);

 private:
  LogMagnitude(XReal log10_value, bool zero)
      : log10_(std::move(log10_value)), zero_(zero) {}

  XReal log10_;
  bool zero_ = false;
};

/// exp(x) as a LogMagnitude; never overflows or underflows.
LogMagnitude exp_magnitude(const XReal& x);

/// log10(sum 10^t_i), factoring out the largest term. Exact-zero terms are
/// skipped; an all-zero sequence yields the exact zero. Throws DomainError
/// on an empty sequence.
LogMagnitude log_sum_exp10(std::span<const LogMagnitude> terms);

/// Parses "1.24355865e-2018", "0.375" or "11/1024" into a LogMagnitude
/// without passing through a double.
LogMagnitude parse_magnitude(std::string_view text, Precision prec);

}  // namespace rarity::xprec

#endif  // RARITY_XPREC_LOG_MAGNITUDE_HPP_
