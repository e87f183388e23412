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

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "qeslab/algebra/poly.hpp"

namespace qeslab {

/// Finite sum of terms c * x^e with exact rational exponents e.
///
/// Terms are ordered by ascending exponent and zero coefficients are pruned
/// on every mutation.
template <class C>
class PowerSum {
 public:
  using Terms = std::map<Rational, C>;

  PowerSum() = default;
  static PowerSum term(const Rational& exponent, const C& coeff) {
    PowerSum s;
    s.add_term(exponent, coeff);
    return s;
  }
  static PowerSum constant(const C& coeff) { return term(Rational(0), coeff); }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const Rational& exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? from_rational<C>(Rational(0)) : it->second;
  }

  void add_term(const Rational& exponent, const C& coeff) {
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
      if (!qeslab::is_zero(coeff)) terms_.emplace(exponent, coeff);
      return;
    }
    it->second += coeff;
    if (qeslab::is_zero(it->second)) terms_.erase(it);
  }

  PowerSum& operator+=(const PowerSum& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PowerSum& operator-=(const PowerSum& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
  friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
  friend PowerSum operator*(const PowerSum& a, const PowerSum& b) {
    PowerSum out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const PowerSum& a, const PowerSum& b) { return a.terms_ == b.terms_; }

  PowerSum scaled(const C& s) const {
    PowerSum out;
    for (const auto& [e, c] : terms_) out.add_term(e, s * c);
    return out;
  }

  std::string str(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(c) << ")";
      if (!e.is_zero()) os << "*" << var << "^(" << e << ")";
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// d/dx: c x^e -> c e x^(e-1).
template <class C>
PowerSum<C> derive_x(const PowerSum<C>& p) {
  PowerSum<C> out;
  for (const auto& [e, c] : p.terms())
    if (!e.is_zero()) out.add_term(e - Rational(1), from_rational<C>(e) * c);
  return out;
}

/// Term-wise antiderivative; the x^-1 coefficient goes to `log_coeff`
/// (the antiderivative is power_part + log_coeff * ln x).
template <class C>
struct Antiderivative {
  PowerSum<C> power_part;
  C log_coeff = from_rational<C>(Rational(0));
};

template <class C>
Antiderivative<C> integrate_x(const PowerSum<C>& p) {
  Antiderivative<C> out;
  for (const auto& [e, c] : p.terms()) {
    if (e == Rational(-1))
      out.log_coeff = c;
    else
      out.power_part.add_term(e + Rational(1), c / from_rational<C>(e + Rational(1)));
  }
  return out;
}

/// Rewrites p(x) under x = scale * xi^exponent, giving a PowerSum in xi.
///
/// Throws NonRationalPower when scale^e leaves the coefficient field; the
/// caller can then retry with Real coefficients.
template <class C>
PowerSum<C> substitute(const PowerSum<C>& p, const C& scale, const Rational& exponent) {
  if (qeslab::is_zero(scale)) throw DomainError("substitute: zero scale");
  if (exponent.is_zero()) throw DomainError("substitute: zero exponent");
  PowerSum<C> out;
  for (const auto& [e, c] : p.terms()) {
    auto factor = exact_pow(scale, e);
    if (!factor)
      throw NonRationalPower("substitute: (" + coeff_str(scale) + ")^(" + e.str() +
                             ") is not representable exactly");
    out.add_term(exponent * e, c * *factor);
  }
  return out;
}

template <class C>
PowerSum<C> substitute(const PowerSum<C>& p, const Rational& exponent) {
  return substitute(p, from_rational<C>(Rational(1)), exponent);
}

/// Evaluates at a point; non-integer exponents require x > 0.
template <class C>
double evaluate(const PowerSum<C>& p, double x) {
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    if (!e.is_integer() && x <= 0.0) throw DomainError("PowerSum::evaluate: x <= 0 with a fractional exponent");
    sum += to_double(c) * (e.is_integer() ? std::pow(x, static_cast<double>(e.num().get_si()))
                                          : std::pow(x, e.to_double()));
  }
  return sum;
}

template <class To, class From>
PowerSum<To> convert(const PowerSum<From>& p) {
  PowerSum<To> out;
  for (const auto& [e, c] : p.terms()) {
    if constexpr (std::is_same_v<To, Real>)
      out.add_term(e, to_real(c));
    else if constexpr (std::is_same_v<From, Rational>)
      out.add_term(e, from_rational<To>(c));
    else
      out.add_term(e, To(c));
  }
  return out;
}

/// Polynomial in xi viewed as a power sum in xi.
template <class To, class From>
PowerSum<To> to_power_sum(const Poly<From>& p) {
  PowerSum<To> out;
  for (const auto& [m, c] : p.terms()) {
    if constexpr (std::is_same_v<To, Real>)
      out.add_term(Rational(m), to_real(c));
    else if constexpr (std::is_same_v<From, Rational>)
      out.add_term(Rational(m), from_rational<To>(c));
    else
      out.add_term(Rational(m), To(c));
  }
  return out;
}

using RationalPowerSum = PowerSum<Rational>;
using SurdPowerSum = PowerSum<QuadraticSurd>;
using RealPowerSum = PowerSum<Real>;

}  // namespace qeslab
