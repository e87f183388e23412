/*
 * Copyright 2026 The qeslab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qeslab/errors.hpp"

namespace qeslab {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }
  Rational(double) = delete;

  /// Exact value of a binary floating-point number.
  static Rational from_double(double v) { return Rational(mpq_class(v)); }

  /// Accepts "n", "n/d" and decimal literals such as "-1.25" or "3e-2".
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }
  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DomainError("Rational: zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

/// Exact k-th root when it exists in Q (negative radicands only for odd k).
inline std::optional<Rational> rational_root(const Rational& value, unsigned long k) {
  if (k == 0) throw DomainError("rational_root: zeroth root");
  if (k == 1) return value;
  if (value.sign() < 0 && k % 2 == 0) return std::nullopt;
  Integer n = value.num(), d = value.den(), rn, rd;
  const bool neg = n < 0;
  if (neg) n = -n;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
  if (neg) rn = -rn;
  return Rational(rn, rd);
}

/// base^exponent when the result is rational.
inline std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
  if (base.is_zero()) {
    if (exponent.sign() <= 0) throw DomainError("rational_power: zero to a non-positive power");
    return Rational(0);
  }
  const Integer den = exponent.den();
  if (!den.fits_ulong_p()) return std::nullopt;
  auto root = rational_root(base, den.get_ui());
  if (!root) return std::nullopt;
  const Integer num = exponent.num();
  if (!num.fits_slong_p()) return std::nullopt;
  return pow(*root, num.get_si());
}

inline Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational literal");
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    std::string head = s.substr(0, slash);
    if (!head.empty() && head[0] == '+') head.erase(0, 1);
    mpz_class n, d;
    if (head.empty() || head[0] == '+' || n.set_str(head, 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
      throw ParseError("malformed rational literal '" + s + "'");
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(n, d);
  }
  // Decimal literal: [sign] digits [. digits] [e [sign] digits]
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits.push_back(s[i++]);
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits.push_back(s[i++]);
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw ParseError("malformed rational literal '" + s + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const std::string rest = s.substr(i);
    char* end = nullptr;
    const long e = std::strtol(rest.c_str(), &end, 10);
    if (rest.empty() || *end != '\0') throw ParseError("malformed exponent in '" + s + "'");
    scale += e;
    i = s.size();
  }
  if (i != s.size()) throw ParseError("malformed rational literal '" + s + "'");
  Rational r(Integer(digits, 10), Integer(1));
  r *= pow(Rational(10), scale);
  return negative ? -r : r;
}

}  // namespace qeslab
