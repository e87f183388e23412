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

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qeslab/sl2rep.hpp"

namespace qeslab {

/// Coefficients of H = sum C_ab T^a T^b + sum C_a T^a (+ C_-0 T^-0).
///
/// T^-0 is the composite T^- T^0 + j T^-, acting as xi^m -> m^2 xi^(m-1)
/// (equivalently xi d^2/dxi^2 + d/dxi).
struct GeneratorCoefficients {
  std::map<std::pair<Generator, Generator>, Rational> quadratic;
  std::map<Generator, Rational> linear;
  std::optional<Rational> minus_zero;

  GeneratorCoefficients& set(Generator a, Generator b, const Rational& c) {
    if (c.is_zero())
      quadratic.erase({a, b});
    else
      quadratic[{a, b}] = c;
    return *this;
  }
  GeneratorCoefficients& set(Generator a, const Rational& c) {
    if (c.is_zero())
      linear.erase(a);
    else
      linear[a] = c;
    return *this;
  }
  GeneratorCoefficients& set_minus_zero(const Rational& c) {
    if (c.is_zero())
      minus_zero.reset();
    else
      minus_zero = c;
    return *this;
  }

  bool empty() const { return quadratic.empty() && linear.empty() && !minus_zero; }

  friend bool operator==(const GeneratorCoefficients&, const GeneratorCoefficients&) = default;
};

/// Second-order operator d2 * D^2 + d1 * D + d0 with polynomial
/// coefficients, D = d/dxi.
struct DifferentialOperator {
  RationalPoly d2, d1, d0;

  RationalPoly apply(const RationalPoly& f) const {
    return d2 * derive(derive(f)) + d1 * derive(f) + d0 * f;
  }
  DifferentialOperator& operator+=(const DifferentialOperator& o) {
    d2 += o.d2;
    d1 += o.d1;
    d0 += o.d0;
    return *this;
  }
  friend DifferentialOperator operator*(const Rational& s, const DifferentialOperator& op) {
    return {s * op.d2, s * op.d1, s * op.d0};
  }
};

namespace detail {

struct FirstOrder {
  RationalPoly u;  // coefficient of D
  RationalPoly v;  // multiplicative part
};

inline FirstOrder generator_operator(Generator g, SpinLabel j) {
  const RationalPoly xi = RationalPoly::monomial(1, Rational(1));
  switch (g) {
    case Generator::plus: return {RationalPoly::monomial(2, Rational(-1)), Rational(2) * j.j() * xi};
    case Generator::zero: return {xi, RationalPoly(-j.j())};
    case Generator::minus: return {RationalPoly(Rational(1)), RationalPoly()};
  }
  return {};
}

// (u_a D + v_a)(u_b D + v_b)
inline DifferentialOperator compose(const FirstOrder& a, const FirstOrder& b) {
  return {a.u * b.u, a.u * derive(b.u) + a.u * b.v + a.v * b.u, a.u * derive(b.v) + a.v * b.v};
}

}  // namespace detail

/// H = -1/2 P4 d^2/dxi^2 + P3 d/dxi + P2.
struct DifferentialForm {
  RationalPoly p4, p3, p2;

  static DifferentialForm from_operator(const DifferentialOperator& op) {
    return {Rational(-2) * op.d2, op.d1, op.d0};
  }
  DifferentialOperator as_operator() const { return {Rational(-1, 2) * p4, p3, p2}; }
  RationalPoly apply(const RationalPoly& f) const { return as_operator().apply(f); }
  DifferentialForm negated() const { return {-p4, -p3, -p2}; }

  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;
};

/// A Hamiltonian expressed through sl(2) generators: its matrix on the
/// (2j+1)-dimensional polynomial sector and its differential form.
struct Sl2Operator {
  SpinLabel j{0};
  GeneratorCoefficients coefficients;
  RationalMatrix matrix;
  DifferentialForm form;

  friend bool operator==(const Sl2Operator&, const Sl2Operator&) = default;
};

/// Differential operator of a coefficient set (independent of the matrix).
inline DifferentialOperator differential_operator(const GeneratorCoefficients& coeffs, SpinLabel j) {
  using detail::compose;
  using detail::generator_operator;
  DifferentialOperator total;
  for (const auto& [ab, c] : coeffs.quadratic)
    total += c * compose(generator_operator(ab.first, j), generator_operator(ab.second, j));
  for (const auto& [a, c] : coeffs.linear) {
    const auto g = generator_operator(a, j);
    total += c * DifferentialOperator{RationalPoly(), g.u, g.v};
  }
  if (coeffs.minus_zero) {
    const DifferentialOperator lowering_weight{RationalPoly::monomial(1, Rational(1)),
                                               RationalPoly(Rational(1)), RationalPoly()};
    total += *coeffs.minus_zero * lowering_weight;
  }
  return total;
}

inline RationalMatrix operator_matrix(const GeneratorCoefficients& coeffs, SpinLabel j) {
  const auto gen = [&](Generator g) { return generator_matrix(g, j).matrix; };
  RationalMatrix m(j.dimension(), j.dimension());
  for (const auto& [ab, c] : coeffs.quadratic) m += c * (gen(ab.first) * gen(ab.second));
  for (const auto& [a, c] : coeffs.linear) m += c * gen(a);
  if (coeffs.minus_zero)
    m += *coeffs.minus_zero *
         (gen(Generator::minus) * gen(Generator::zero) + j.j() * gen(Generator::minus));
  return m;
}

inline Sl2Operator assemble(const GeneratorCoefficients& coeffs, SpinLabel j) {
  if (coeffs.empty()) throw DomainError("assemble: no nonzero generator coefficient");
  return {j, coeffs, operator_matrix(coeffs, j),
          DifferentialForm::from_operator(differential_operator(coeffs, j))};
}

/// True when the differential form applied to every basis monomial
/// reproduces the corresponding matrix column and stays inside the sector.
inline bool form_matches_matrix(const Sl2Operator& op) {
  const std::size_t dim = op.j.dimension();
  for (std::size_t m = 0; m < dim; ++m) {
    const RationalPoly image = op.form.apply(RationalPoly::monomial(static_cast<int>(m), Rational(1)));
    if (image.degree() > op.j.twice_j()) return false;
    const auto column = image.dense(dim);
    for (std::size_t r = 0; r < dim; ++r)
      if (!(column[r] == op.matrix(r, m))) return false;
  }
  return true;
}

}  // namespace qeslab
