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

#ifndef RARITY_XPREC_XREAL_HPP_
#define RARITY_XPREC_XREAL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace rarity {

/// Thrown when an argument lies outside an operation's mathematical domain
/// (division by zero, log of a non-positive number, k > n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace rarity

namespace rarity::xprec {

/// Working precision in decimal digits.
struct Precision {
  int digits = 64;

  /// Binary significand size used for a value carrying `digits` decimal
  /// digits, with a few guard bits on top.
  mpfr_prec_t bits() const;

  /// Same precision widened by `extra` decimal digits.
  Precision plus(int extra) const { return Precision{digits + extra}; }

  friend bool operator==(Precision, Precision) = default;
};

/// Larger of two precisions; binary operations return results at this one.
inline Precision max(Precision a, Precision b) {
  return a.digits >= b.digits ? a : b;
}

/// Signed real with an arbitrary-precision significand and a 64-bit binary
/// exponent (about +/-3e11 decimal orders of magnitude).
///
/// Every value carries its own precision. Values are immutable from the
/// outside: all arithmetic is expressed as free functions that return new
/// values, so an XReal can be shared between threads freely.
class XReal {
 public:
  /// Zero at default precision.
  XReal();
  explicit XReal(Precision prec);
  XReal(long value, Precision prec);
  XReal(double value, Precision prec);

  XReal(const XReal& other);
  XReal(XReal&& other) noexcept;
  XReal& operator=(const XReal& other);
  XReal& operator=(XReal&& other) noexcept;
  ~XReal();

  static XReal from_integer(const mpz_class& value, Precision prec);
  static XReal from_rational(const mpq_class& value, Precision prec);

  /// Parses a decimal literal ("0.994", "-2017.905331", "1.24355865e-2018")
  /// or a ratio of integers ("1/2"). Throws DomainError on malformed text.
  static XReal parse(std::string_view text, Precision prec);

  Precision precision() const { return prec_; }
  /// Same value rounded to a different precision.
  XReal with_precision(Precision prec) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Largest integer <= value. Throws DomainError when it does not fit.
  std::int64_t floor_to_int() const;
  /// Largest integer <= value, exact.
  mpz_class floor_to_integer() const;

  /// Shortest fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;
  /// Rendering with `significant` significant digits in mpfr "%Re" style.
  std::string to_string(int significant) const;

  mpfr_srcptr get() const { return value_; }

  friend std::partial_ordering operator<=>(const XReal& a, const XReal& b);
  friend bool operator==(const XReal& a, const XReal& b);
  friend std::partial_ordering operator<=>(const XReal& a, long b);
  friend bool operator==(const XReal& a, long b);

 private:
  friend class Builder;

  mpfr_t value_;
  Precision prec_;
};

/// Mutable scratch handle used inside the implementation to write an mpfr
/// result into a fresh XReal. Not part of the value-semantics surface.
class Builder {
 public:
  explicit Builder(Precision prec) : out_(prec) {}
  mpfr_ptr get() { return out_.value_; }
  XReal finish() &&;

 private:
  XReal out_;
};

enum class ArithOp { add, sub, mul, div };
enum class ElementaryFn { ln, exp, log10, pow };

XReal arith(ArithOp op, const XReal& a, const XReal& b);
XReal elementary(ElementaryFn fn, const XReal& x,
                 const std::optional<XReal>& y = std::nullopt);

XReal operator+(const XReal& a, const XReal& b);
XReal operator-(const XReal& a, const XReal& b);
XReal operator*(const XReal& a, const XReal& b);
XReal operator/(const XReal& a, const XReal& b);
XReal operator-(const XReal& a);

XReal add(const XReal& a, long b);
XReal mul(const XReal& a, long b);
XReal mul(const XReal& a, std::uint64_t b);
XReal div(const XReal& a, long b);

XReal abs(const XReal& x);
XReal ln(const XReal& x);
XReal log10(const XReal& x);
XReal log1p(const XReal& x);
XReal exp(const XReal& x);
/// 10^x.
XReal exp10(const XReal& x);
XReal pow(const XReal& x, const XReal& y);
XReal sqrt(const XReal& x);
XReal floor(const XReal& x);

/// log10 of an exact non-negative integer, correctly rounded at `prec`.
XReal log10(const mpz_class& value, Precision prec);

/// Exact rational from a decimal literal ("0.994", "2.5e-3") or a ratio of
/// integers ("994/1000"). Throws DomainError on malformed text.
mpq_class parse_rational(std::string_view text);

XReal ln10(Precision prec);
XReal ln2(Precision prec);
XReal pi(Precision prec);

}  // namespace rarity::xprec

#endif  // RARITY_XPREC_XREAL_HPP_
