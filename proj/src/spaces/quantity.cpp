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

#include "rarity/spaces/quantity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rarity::spaces {

namespace {

XReal log_of(const mpz_class& v, LogBase base, Precision prec) {
  XReal x = XReal::from_integer(v, prec.plus(4));
  xprec::Builder out(prec);
  if (base == LogBase::two)
    mpfr_log2(out.get(), x.get(), MPFR_RNDN);
  else
    mpfr_log10(out.get(), x.get(), MPFR_RNDN);
  return std::move(out).finish();
}

XReal log_pi(LogBase base, Precision prec) {
  XReal p = xprec::pi(prec.plus(4));
  xprec::Builder out(prec);
  if (base == LogBase::two)
    mpfr_log2(out.get(), p.get(), MPFR_RNDN);
  else
    mpfr_log10(out.get(), p.get(), MPFR_RNDN);
  return std::move(out).finish();
}

}  // namespace

Quantity Quantity::integer(const mpz_class& value) {
  if (value < 1) throw DomainError("integer factors must be positive");
  Quantity q;
  q.factors_.push_back(Factor{Factor::Kind::integer, value, 1});
  return q;
}

Quantity Quantity::integer(std::string_view decimal) {
  mpz_class v;
  if (v.set_str(std::string(decimal), 10) != 0)
    throw DomainError("malformed integer '" + std::string(decimal) + "'");
  return integer(v);
}

Quantity Quantity::power(const mpz_class& base, std::int64_t exponent) {
  if (base < 2) throw DomainError("power base must be at least 2");
  Quantity q;
  q.factors_.push_back(Factor{Factor::Kind::integer, base, exponent});
  return q;
}

Quantity Quantity::pi_power(std::int64_t exponent) {
  Quantity q;
  q.factors_.push_back(Factor{Factor::Kind::pi, 1, exponent});
  return q;
}

Quantity Quantity::from_log2(XReal log2_value) {
  Quantity q;
  q.log2_literal_ = std::move(log2_value);
  return q;
}

Quantity Quantity::operator*(const Quantity& other) const {
  if (is_log_literal() || other.is_log_literal())
    throw DomainError("cannot multiply a bare log2 magnitude");
  Quantity out = *this;
  out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
  return out;
}

double Quantity::digit_estimate() const {
  if (log2_literal_) return log2_literal_->to_double() * std::log10(2.0) + 1;
  double digits = 0;
  for (const auto& f : factors_) {
    const double lg =
        f.kind == Factor::Kind::pi ? std::log10(M_PI) : mpz_sizeinbase(f.base.get_mpz_t(), 10);
    digits += static_cast<double>(f.exponent) * lg;
  }
  return digits + 1;
}

std::optional<mpz_class> Quantity::materialize(std::uint64_t max_digits) const {
  if (log2_literal_) return std::nullopt;
  if (digit_estimate() > static_cast<double>(max_digits)) return std::nullopt;
  mpz_class num = 1, den = 1;
  for (const auto& f : factors_) {
    if (f.kind == Factor::Kind::pi) return std::nullopt;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), f.base.get_mpz_t(),
               static_cast<unsigned long>(f.exponent < 0 ? -f.exponent : f.exponent));
    (f.exponent < 0 ? den : num) *= p;
  }
  if (num % den != 0) return std::nullopt;
  return mpz_class(num / den);
}

XReal quantity_log(const Quantity& q, LogBase base, Precision prec) {
  prec = Precision{std::max(prec.digits, 32)};
  if (q.log2_literal()) {
    XReal l2 = q.log2_literal()->with_precision(prec);
    if (base == LogBase::two) return l2;
    return l2 * xprec::log10(XReal(2L, prec));
  }
  const Precision work = prec.plus(10);
  XReal total(work);
  for (const auto& f : q.factors()) {
    XReal one = f.kind == Factor::Kind::pi ? log_pi(base, work) : log_of(f.base, base, work);
    total = total + mul(one, static_cast<long>(f.exponent));
  }
  return total.with_precision(prec);
}

}  // namespace rarity::spaces
