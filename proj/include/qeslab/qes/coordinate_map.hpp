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

#include "qeslab/qes/operator.hpp"

namespace qeslab {

/// How to take P4^(1/2) when reading the coordinate off the form.
///   automatic: positive root; a negative P4 coefficient is ambiguous.
///   positive:  positive root; a negative P4 coefficient is an error.
///   negated:   work with -H, so P4 -> -P4 (energies change sign).
enum class Branch { automatic, positive, negated };

/// Coordinate x = scale * xi^exponent read off a monomial P4 = p xi^n.
struct CoordinateMap {
  int n = 0;
  Rational p;         // coefficient of xi^n in the branch-adjusted P4, > 0
  Rational exponent;  // (2 - n)/2
  QuadraticSurd scale;
  int energy_sign = 1;

  /// c = (2/(2-n)) p^(-1/2), the scale for which dx/dxi = P4^(-1/2).
  QuadraticSurd exact_scale() const {
    return QuadraticSurd(Rational(2, 2 - n)) / QuadraticSurd::sqrt(p);
  }
  /// |c| == 1, i.e. x = +-xi^((2-n)/2) without rescaling.
  bool normalized() const { return scale * scale == QuadraticSurd(1); }
  /// sign of dx/dxi relative to P4^(-1/2)
  int orientation() const { return scale.sign() * exponent.sign(); }

  CoordinateMap with_scale(const QuadraticSurd& c) const {
    if (c.is_zero()) throw DomainError("CoordinateMap: zero scale");
    CoordinateMap m = *this;
    m.scale = c;
    return m;
  }
  CoordinateMap flipped() const { return with_scale(-scale); }

  double x_of_xi(double xi) const { return scale.to_double() * std::pow(xi, exponent.to_double()); }
  double xi_of_x(double x) const {
    const double ratio = x / scale.to_double();
    if (ratio <= 0.0 && !(Rational(1) / exponent).is_integer())
      throw DomainError("CoordinateMap: x outside the image of the map");
    const Rational inv = Rational(1) / exponent;
    if (inv.is_integer()) return std::pow(ratio, static_cast<double>(inv.num().get_si()));
    return std::pow(ratio, inv.to_double());
  }

  friend bool operator==(const CoordinateMap&, const CoordinateMap&) = default;
};

inline CoordinateMap coordinate_map(const DifferentialForm& form, Branch branch = Branch::automatic) {
  const auto& terms = form.p4.terms();
  if (terms.empty()) throw NonMonomial("coordinate_map: P4 vanishes (no kinetic term)");
  if (terms.size() > 1)
    throw NonMonomial("coordinate_map: P4 = " + form.p4.str() + " has several terms");
  const int n = terms.begin()->first;
  Rational p = terms.begin()->second;
  if (n == 2) throw ExponentialCase("coordinate_map: P4 proportional to xi^2 gives xi = e^x");
  if (n > 4) throw NonMonomial("coordinate_map: P4 degree exceeds 4");

  CoordinateMap map;
  map.n = n;
  map.exponent = Rational(2 - n, 2);
  if (p.sign() < 0) {
    if (branch == Branch::automatic)
      throw BranchAmbiguity("coordinate_map: P4 coefficient " + p.str() +
                            " is negative; choose Branch::negated to work with -H");
    if (branch == Branch::positive)
      throw DomainError("coordinate_map: P4 coefficient " + p.str() + " has no real square root");
    p = -p;
    map.energy_sign = -1;
  } else if (branch == Branch::negated) {
    throw DomainError("coordinate_map: Branch::negated needs a negative P4 coefficient");
  }
  map.p = p;
  map.scale = map.exact_scale();
  return map;
}

}  // namespace qeslab
