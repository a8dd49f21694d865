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

#include "rarity/xprec/log_magnitude.hpp"

#include <algorithm>
#include <cctype>

namespace rarity::xprec {

std::string Scientific::str() const {
  std::string out = mantissa;
  out += 'e';
  out += exponent < 0 ? '-' : '+';
  out += std::to_string(exponent < 0 ? -exponent : exponent);
  return out;
}

Scientific make_scientific(const mpz_class& rounded_digits, int significant,
                           std::int64_t exponent) {
  mpz_class digits = rounded_digits;
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(significant));
  if (digits >= limit) {
    // Rounding carried into a new leading digit (9.99..5 -> 10.0).
    digits /= 10;
    ++exponent;
  }
  std::string text = digits.get_str();
  std::string mantissa = text.substr(0, 1);
  std::string frac = text.substr(1);
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  if (frac.empty()) frac = "0";
  mantissa += '.';
  mantissa += frac;
  return Scientific{mantissa, exponent};
}

LogMagnitude LogMagnitude::zero(Precision prec) { return {XReal(prec), true}; }

LogMagnitude LogMagnitude::one(Precision prec) { return {XReal(prec), false}; }

LogMagnitude LogMagnitude::from_log10(XReal log10_value) {
  return {std::move(log10_value), false};
}

LogMagnitude LogMagnitude::from_ln(const XReal& ln_value) {
  return {ln_value / ln10(ln_value.precision()), false};
}

LogMagnitude LogMagnitude::from_value(const XReal& value) {
  if (value.sign() < 0) throw DomainError("negative magnitude");
  if (value.is_zero()) return zero(value.precision());
  return {xprec::log10(value), false};
}

XReal LogMagnitude::value() const {
  if (zero_) return XReal(log10_.precision());
  return exp10(log10_);
}

Scientific LogMagnitude::scientific(int significant) const {
  if (significant < 1) throw DomainError("need at least one significant digit");
  if (zero_) return Scientific{"0.0", 0};
  const Precision prec = log10_.precision();
  XReal whole = floor(log10_);
  XReal frac = log10_ - whole;
  XReal scaled = exp10(add(frac, significant - 1));
  Builder rounded(prec);
  mpfr_round(rounded.get(), scaled.get());
  mpz_class digits = std::move(rounded).finish().floor_to_integer();
  return make_scientific(digits, significant, whole.floor_to_int());
}

LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b) {
  if (a.zero_ || b.zero_) return LogMagnitude::zero(max(a.precision(), b.precision()));
  return LogMagnitude::from_log10(a.log10_ + b.log10_);
}

LogMagnitude operator/(const LogMagnitude& a, const LogMagnitude& b) {
  if (b.zero_) throw DomainError("division by a zero magnitude");
  if (a.zero_) return a;
  return LogMagnitude::from_log10(a.log10_ - b.log10_);
}

LogMagnitude exp_magnitude(const XReal& x) { return LogMagnitude::from_ln(x); }

LogMagnitude log_sum_exp10(std::span<const LogMagnitude> terms) {
  if (terms.empty()) throw DomainError("log_sum_exp10 of an empty sequence");
  const LogMagnitude* top = nullptr;
  Precision prec = terms.front().precision();
  for (const auto& t : terms) {
    prec = max(prec, t.precision());
    if (t.is_zero()) continue;
    if (top == nullptr || t.log10() > top->log10()) top = &t;
  }
  if (top == nullptr) return LogMagnitude::zero(prec);

  const XReal& peak = top->log10();
  XReal sum(prec);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    sum = sum + exp10(t.log10() - peak);
  }
  return LogMagnitude::from_log10(peak + log10(sum));
}

LogMagnitude parse_magnitude(std::string_view text, Precision prec) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw DomainError("empty number");
  if (s.find('/') != std::string::npos) {
    mpq_class q = parse_rational(s);
    if (q < 0) throw DomainError("negative magnitude");
    if (q == 0) return LogMagnitude::zero(prec);
    XReal log_q = log10(q.get_num(), prec.plus(4)) - log10(q.get_den(), prec.plus(4));
    return LogMagnitude::from_log10(log_q.with_precision(prec));
  }
  std::int64_t exponent = 0;
  std::string mantissa = s;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::size_t used = 0;
    std::string exp_text = s.substr(e + 1);
    try {
      exponent = std::stoll(exp_text, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed exponent in '" + s + "'");
    }
    if (used != exp_text.size()) throw DomainError("malformed exponent in '" + s + "'");
    mantissa = s.substr(0, e);
  }
  XReal m = XReal::parse(mantissa, prec);
  if (m.sign() < 0) throw DomainError("negative magnitude");
  if (m.is_zero()) return LogMagnitude::zero(prec);
  return LogMagnitude::from_log10(add(log10(m), static_cast<long>(exponent)));
}

}  // namespace rarity::xprec
