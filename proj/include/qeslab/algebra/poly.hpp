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

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qeslab/algebra/real.hpp"

namespace qeslab {

/// Univariate polynomial in xi with coefficients in C.
///
/// Stored sparsely by degree; zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
template <class C>
class Poly {
 public:
  using Terms = std::map<int, C>;

  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(const C& constant) { set(0, constant); }  // NOLINT(google-explicit-constructor)

  static Poly monomial(int degree, const C& coeff) {
    Poly p;
    p.set(degree, coeff);
    return p;
  }
  /// Builds from coefficients indexed by degree.
  static Poly from_coefficients(const std::vector<C>& coeffs) {
    Poly p;
    for (std::size_t m = 0; m < coeffs.size(); ++m) p.set(static_cast<int>(m), coeffs[m]);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
  C coefficient(int degree) const {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? from_rational<C>(Rational(0)) : it->second;
  }
  /// Dense coefficient vector of length `size` (degree < size required).
  std::vector<C> dense(std::size_t size) const {
    std::vector<C> out(size, from_rational<C>(Rational(0)));
    for (const auto& [m, c] : terms_) {
      if (m < 0 || static_cast<std::size_t>(m) >= size) throw DegreeOverflow("Poly::dense: degree exceeds size");
      out[static_cast<std::size_t>(m)] = c;
    }
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return Poly() - *this; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    return out;
  }
  friend Poly operator*(const C& s, const Poly& p) {
    Poly out;
    for (const auto& [m, c] : p.terms_) out.set(m, s * c);
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  void add_term(int degree, const C& coeff) {
    if (degree < 0) throw DomainError("Poly: negative degree");
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
      if (!qeslab::is_zero(coeff)) terms_.emplace(degree, coeff);
      return;
    }
    it->second += coeff;
    if (qeslab::is_zero(it->second)) terms_.erase(it);
  }

  std::string str(const std::string& var = "xi") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(c) << ")";
      if (m > 0) os << "*" << var << (m > 1 ? "^" + std::to_string(m) : "");
    }
    return os.str();
  }

 private:
  void set(int degree, const C& coeff) {
    if (degree < 0) throw DomainError("Poly: negative degree");
    if (qeslab::is_zero(coeff))
      terms_.erase(degree);
    else
      terms_[degree] = coeff;
  }

  Terms terms_;
};

using RationalPoly = Poly<Rational>;

/// d/dxi.
template <class C>
Poly<C> derive(const Poly<C>& p) {
  Poly<C> out;
  for (const auto& [m, c] : p.terms())
    if (m > 0) out.add_term(m - 1, from_rational<C>(Rational(m)) * c);
  return out;
}

/// Horner evaluation at `point`.
template <class C>
C evaluate(const Poly<C>& p, const C& point) {
  C acc = from_rational<C>(Rational(0));
  int current = p.degree();
  if (current == Poly<C>::kZeroDegree) return acc;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    while (current > it->first) {
      acc *= point;
      --current;
    }
    acc += it->second;
  }
  while (current > 0) {
    acc *= point;
    --current;
  }
  return acc;
}

template <class To, class From>
Poly<To> convert(const Poly<From>& p) {
  Poly<To> out;
  for (const auto& [m, c] : p.terms()) {
    if constexpr (std::is_same_v<From, Rational>)
      out.add_term(m, from_rational<To>(c));
    else
      out.add_term(m, To(c));
  }
  return out;
}

}  // namespace qeslab
