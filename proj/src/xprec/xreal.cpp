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

#include "rarity/xprec/xreal.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

namespace rarity::xprec {

namespace {

// MPFR keeps its exponent range per thread. The default (about 2^30 binary
// orders) is too narrow for probabilities like 10^-43000 raised to further
// powers, so every thread that creates a value widens it once. The bound of
// 2^40 stays well inside MPFR's supported range.
void widen_exponent_range() {
  thread_local const bool widened = [] {
    constexpr mpfr_exp_t kLimit = mpfr_exp_t{1} << 40;
    mpfr_set_emin(-kLimit);
    mpfr_set_emax(kLimit);
    return true;
  }();
  (void)widened;
}

void canonicalize(mpfr_ptr v) {
  if (mpfr_zero_p(v)) mpfr_set_zero(v, 1);
}

template <typename Fn>
XReal unary(const XReal& x, Fn&& fn) {
  Builder out(x.precision());
  fn(out.get(), x.get());
  return std::move(out).finish();
}

template <typename Fn>
XReal binary(const XReal& a, const XReal& b, Fn&& fn) {
  Builder out(max(a.precision(), b.precision()));
  fn(out.get(), a.get(), b.get());
  return std::move(out).finish();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

mpfr_prec_t Precision::bits() const {
  if (digits < 1) throw DomainError("precision must be at least 1 digit");
  return static_cast<mpfr_prec_t>(
             std::ceil(digits * 3.321928094887362347870319429489)) +
         8;
}

XReal::XReal() : XReal(Precision{}) {}

XReal::XReal(Precision prec) : prec_(prec) {
  widen_exponent_range();
  mpfr_init2(value_, prec.bits());
  mpfr_set_zero(value_, 1);
}

XReal::XReal(long value, Precision prec) : XReal(prec) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

XReal::XReal(double value, Precision prec) : XReal(prec) {
  if (!std::isfinite(value)) throw DomainError("non-finite double");
  mpfr_set_d(value_, value, MPFR_RNDN);
  canonicalize(value_);
}

XReal::XReal(const XReal& other) : prec_(other.prec_) {
  widen_exponent_range();
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

XReal::XReal(XReal&& other) noexcept : prec_(other.prec_) {
  widen_exponent_range();
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

XReal& XReal::operator=(const XReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    prec_ = other.prec_;
  }
  return *this;
}

XReal& XReal::operator=(XReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(value_, other.value_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

XReal::~XReal() { mpfr_clear(value_); }

XReal Builder::finish() && {
  if (mpfr_nan_p(out_.value_)) throw DomainError("operation produced NaN");
  if (mpfr_inf_p(out_.value_))
    throw DomainError("operation overflowed the exponent range");
  canonicalize(out_.value_);
  return std::move(out_);
}

XReal XReal::from_integer(const mpz_class& value, Precision prec) {
  Builder out(prec);
  mpfr_set_z(out.get(), value.get_mpz_t(), MPFR_RNDN);
  return std::move(out).finish();
}

XReal XReal::from_rational(const mpq_class& value, Precision prec) {
  Builder out(prec);
  mpfr_set_q(out.get(), value.get_mpq_t(), MPFR_RNDN);
  return std::move(out).finish();
}

XReal XReal::parse(std::string_view text, Precision prec) {
  text = trim(text);
  if (text.find('/') != std::string_view::npos)
    return from_rational(parse_rational(text), prec);
  std::string buf(text);
  if (buf.empty()) throw DomainError("empty number");
  Builder out(prec);
  char* end = nullptr;
  mpfr_strtofr(out.get(), buf.c_str(), &end, 10, MPFR_RNDN);
  if (end != buf.c_str() + buf.size())
    throw DomainError("malformed number: '" + buf + "'");
  return std::move(out).finish();
}

XReal XReal::with_precision(Precision prec) const {
  Builder out(prec);
  mpfr_set(out.get(), value_, MPFR_RNDN);
  return std::move(out).finish();
}

std::int64_t XReal::floor_to_int() const {
  if (!mpfr_fits_slong_p(value_, MPFR_RNDD))
    throw DomainError("value does not fit a 64-bit integer");
  return mpfr_get_si(value_, MPFR_RNDD);
}

mpz_class XReal::floor_to_integer() const {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDD);
  return out;
}

std::string XReal::to_fixed(int decimals) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rf", decimals, value_);
  std::string s(raw);
  mpfr_free_str(raw);
  if (s.starts_with("-") && s.find_first_not_of("-0.") == std::string::npos)
    s.erase(0, 1);
  return s;
}

std::string XReal::to_string(int significant) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", significant > 1 ? significant - 1 : 0, value_);
  std::string s(raw);
  mpfr_free_str(raw);
  return s;
}

std::partial_ordering operator<=>(const XReal& a, const XReal& b) {
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

bool operator==(const XReal& a, const XReal& b) {
  return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const XReal& a, long b) {
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

bool operator==(const XReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }

XReal arith(ArithOp op, const XReal& a, const XReal& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic op");
}

XReal elementary(ElementaryFn fn, const XReal& x, const std::optional<XReal>& y) {
  switch (fn) {
    case ElementaryFn::ln: return ln(x);
    case ElementaryFn::exp: return exp(x);
    case ElementaryFn::log10: return log10(x);
    case ElementaryFn::pow:
      if (!y) throw DomainError("pow requires an exponent");
      return pow(x, *y);
  }
  throw DomainError("unknown elementary function");
}

XReal operator+(const XReal& a, const XReal& b) {
  return binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_add(r, x, y, MPFR_RNDN);
  });
}

XReal operator-(const XReal& a, const XReal& b) {
  return binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_sub(r, x, y, MPFR_RNDN);
  });
}

XReal operator*(const XReal& a, const XReal& b) {
  return binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_mul(r, x, y, MPFR_RNDN);
  });
}

XReal operator/(const XReal& a, const XReal& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return binary(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_div(r, x, y, MPFR_RNDN);
  });
}

XReal operator-(const XReal& a) {
  return unary(a, [](mpfr_ptr r, mpfr_srcptr x) { mpfr_neg(r, x, MPFR_RNDN); });
}

XReal add(const XReal& a, long b) {
  return unary(a, [b](mpfr_ptr r, mpfr_srcptr x) { mpfr_add_si(r, x, b, MPFR_RNDN); });
}

XReal mul(const XReal& a, long b) {
  return unary(a, [b](mpfr_ptr r, mpfr_srcptr x) { mpfr_mul_si(r, x, b, MPFR_RNDN); });
}

XReal mul(const XReal& a, std::uint64_t b) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return unary(a, [b](mpfr_ptr r, mpfr_srcptr x) {
    mpfr_mul_ui(r, x, static_cast<unsigned long>(b), MPFR_RNDN);
  });
}

XReal div(const XReal& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  return unary(a, [b](mpfr_ptr r, mpfr_srcptr x) { mpfr_div_si(r, x, b, MPFR_RNDN); });
}

XReal abs(const XReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_abs(r, v, MPFR_RNDN); });
}

XReal ln(const XReal& x) {
  if (x.sign() <= 0) throw DomainError("ln of a non-positive number");
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_log(r, v, MPFR_RNDN); });
}

XReal log10(const XReal& x) {
  if (x.sign() <= 0) throw DomainError("log10 of a non-positive number");
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_log10(r, v, MPFR_RNDN); });
}

XReal log1p(const XReal& x) {
  if (x <= -1L) throw DomainError("log1p argument must exceed -1");
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_log1p(r, v, MPFR_RNDN); });
}

XReal exp(const XReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_exp(r, v, MPFR_RNDN); });
}

XReal exp10(const XReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_exp10(r, v, MPFR_RNDN); });
}

XReal pow(const XReal& x, const XReal& y) {
  if (x.sign() < 0 && !y.is_integer())
    throw DomainError("pow of a negative base needs an integer exponent");
  if (x.is_zero() && y.sign() < 0) throw DomainError("pow(0, negative)");
  return binary(x, y, [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b) {
    mpfr_pow(r, a, b, MPFR_RNDN);
  });
}

XReal sqrt(const XReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_sqrt(r, v, MPFR_RNDN); });
}

XReal floor(const XReal& x) {
  return unary(x, [](mpfr_ptr r, mpfr_srcptr v) { mpfr_floor(r, v); });
}

XReal log10(const mpz_class& value, Precision prec) {
  if (sgn(value) <= 0) throw DomainError("log10 of a non-positive integer");
  // The integer is rounded to prec + a few bits before the log; the relative
  // rounding error 2^-bits only shifts the log by about that much absolutely.
  Builder tmp(prec.plus(4));
  mpfr_set_z(tmp.get(), value.get_mpz_t(), MPFR_RNDN);
  XReal v = std::move(tmp).finish();
  return log10(v).with_precision(prec);
}

mpq_class parse_rational(std::string_view text) {
  text = trim(text);
  auto bad = [&] { return DomainError("malformed number: '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(text.substr(0, slash));
    std::string_view den = trim(text.substr(slash + 1));
    bool negative = !num.empty() && (num.front() == '-' || num.front() == '+');
    if (negative) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class top{std::string(num), 10};
    mpz_class bottom{std::string(den), 10};
    if (bottom == 0) throw DomainError("zero denominator");
    mpq_class q{top, bottom};
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }

  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(rest.substr(e + 1));
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exp_text.size()) throw bad();
    rest = rest.substr(0, e);
  }
  std::string digits;
  if (auto dot = rest.find('.'); dot != std::string_view::npos) {
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = rest.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw bad();
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(rest)) throw bad();
    digits = std::string(rest);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  mpq_class q = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

XReal ln10(Precision prec) {
  Builder out(prec);
  mpfr_set_ui(out.get(), 10, MPFR_RNDN);
  mpfr_log(out.get(), out.get(), MPFR_RNDN);
  return std::move(out).finish();
}

XReal ln2(Precision prec) {
  Builder out(prec);
  mpfr_const_log2(out.get(), MPFR_RNDN);
  return std::move(out).finish();
}

XReal pi(Precision prec) {
  Builder out(prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return std::move(out).finish();
}

}  // namespace rarity::xprec
