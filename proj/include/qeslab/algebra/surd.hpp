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

#include <optional>
#include <cctype>
#include <string>

#include "qeslab/algebra/rational.hpp"

namespace qeslab {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)).
///
/// The radicand d is a positive integer with small square factors removed;
/// b == 0 always implies d == 1, so plain rationals combine with any field.
/// Combining two irrational values over different radicands throws
/// MixedRadicand.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long a) : a_(a) {}             // NOLINT
  QuadraticSurd(int a) : a_(a) {}              // NOLINT
  QuadraticSurd(const Rational& a, const Rational& b, const Integer& d) : a_(a), b_(b), d_(d) {
    if (d_ <= 0) throw DomainError("QuadraticSurd: radicand must be positive");
    normalize();
  }

  /// Exact square root of a non-negative rational.
  static QuadraticSurd sqrt(const Rational& r);

  /// Parses the format produced by str(): "a", "b*sqrt(d)", "a+b*sqrt(d)".
  static QuadraticSurd parse(const std::string& text);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Integer& radicand() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return a_;
  }

  int sign() const {
    const int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    const Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_, 1);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  double to_double() const;
  std::string str() const {
    if (is_rational()) return a_.str();
    std::string out;
    if (!a_.is_zero()) out = a_.str() + (b_.sign() > 0 ? "+" : "");
    return out + b_.str() + "*sqrt(" + d_.get_str() + ")";
  }

  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_); }
  QuadraticSurd& operator+=(const QuadraticSurd& o) {
    d_ = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
  }
  QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this += -o; }
  QuadraticSurd& operator*=(const QuadraticSurd& o) {
    const Integer d = common_radicand(o);
    const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d, 1);
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
  }
  QuadraticSurd& operator/=(const QuadraticSurd& o) {
    const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_, 1);
    if (norm.is_zero()) throw DomainError("QuadraticSurd: division by zero");
    *this *= QuadraticSurd(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this;
  }
  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  void normalize() {
    if (b_.is_zero()) d_ = 1;
    if (d_ == 1) {
      a_ += b_;
      b_ = Rational(0);
    }
  }
  Integer common_radicand(const QuadraticSurd& o) const {
    if (is_rational()) return o.d_;
    if (o.is_rational() || d_ == o.d_) return d_;
    throw MixedRadicand("QuadraticSurd: sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() +
                        ") in one expression");
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{1};
};

using Surd = QuadraticSurd;

inline QuadraticSurd QuadraticSurd::sqrt(const Rational& r) {
  if (r.sign() < 0) throw DomainError("QuadraticSurd::sqrt of a negative number");
  if (r.is_zero()) return QuadraticSurd();
  // sqrt(n/m) = sqrt(n m)/m
  Integer radicand = r.num() * r.den();
  Integer outside = 1;
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    return QuadraticSurd(Rational(root, r.den()));
  }
  for (unsigned long p = 2; p < 1000; ++p) {
    const Integer sq = Integer(p) * Integer(p);
    if (sq > radicand) break;
    while (mpz_divisible_p(radicand.get_mpz_t(), sq.get_mpz_t())) {
      radicand /= sq;
      outside *= p;
    }
  }
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    return QuadraticSurd(Rational(root * outside, r.den()));
  }
  return QuadraticSurd(Rational(0), Rational(outside, r.den()), radicand);
}

inline double QuadraticSurd::to_double() const {
  if (is_rational()) return a_.to_double();
  mpf_class root(d_, 128);
  mpf_class sum(0, 128);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  sum = mpf_class(a_.raw(), 128) + mpf_class(b_.raw(), 128) * root;
  return sum.get_d();
}

inline QuadraticSurd QuadraticSurd::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  const auto star = s.find("*sqrt(");
  if (star == std::string::npos) return QuadraticSurd(Rational::parse(s));
  if (s.back() != ')') throw ParseError("malformed surd literal '" + text + "'");
  const std::string radicand = s.substr(star + 6, s.size() - star - 7);
  if (radicand.empty() || radicand.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("malformed radicand in '" + text + "'");
  // split "a+b" at the last sign that is neither leading nor part of an exponent
  const std::string coeffs = s.substr(0, star);
  std::size_t split = 0;
  for (std::size_t k = coeffs.size(); k-- > 1;)
    if ((coeffs[k] == '+' || coeffs[k] == '-') && coeffs[k - 1] != 'e' && coeffs[k - 1] != 'E') {
      split = k;
      break;
    }
  const Rational a = split == 0 ? Rational(0) : Rational::parse(coeffs.substr(0, split));
  return QuadraticSurd(a, Rational::parse(coeffs.substr(split)), Integer(radicand));
}

/// Integer power, exact.
inline QuadraticSurd pow(const QuadraticSurd& base, long exponent) {
  if (exponent < 0) return pow(QuadraticSurd(1) / base, -exponent);
  QuadraticSurd result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace qeslab
