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

#include "qeslab/qes/coordinate_map.hpp"

namespace qeslab {

/// Quasi-gauge data of a form in the physical coordinate x:
///   H = -1/2 d^2/dx^2 + A(x) d/dx + deltaV,
///   V = deltaV + A^2/2 - A'/2,
///   a(x) = a_power(x) + log_coeff * ln x,  psi = psibar * exp(-a).
struct GaugeData {
  SurdPowerSum A;
  SurdPowerSum a_power;
  QuadraticSurd log_coeff;
  SurdPowerSum deltaV;
  SurdPowerSum V;
  int energy_sign = 1;

  friend bool operator==(const GaugeData&, const GaugeData&) = default;
};

/// V - deltaV - A^2/2 + A'/2, empty whenever the gauge data is consistent.
inline SurdPowerSum gauge_identity_defect(const GaugeData& g) {
  const QuadraticSurd half(Rational(1, 2));
  return g.V - g.deltaV - (g.A * g.A).scaled(half) + derive_x(g.A).scaled(half);
}

inline GaugeData gauge_data(const DifferentialForm& form, const CoordinateMap& map) {
  const DifferentialForm f = map.energy_sign < 0 ? form.negated() : form;
  const auto& p4 = f.p4.terms();
  if (p4.size() != 1 || p4.begin()->first != map.n || !(p4.begin()->second == map.p))
    throw DomainError("gauge_data: coordinate map was built from a different P4");
  // the kinetic term is -1/2 d^2/dx^2 only when c^2 q^2 p = 1
  const QuadraticSurd qq(map.exponent * map.exponent * map.p);
  if (!(map.scale * map.scale * qq == QuadraticSurd(1)))
    throw ScaleMismatch("gauge_data: scale " + map.scale.str() +
                        " does not normalize the kinetic term; expected +-" +
                        map.exact_scale().str());

  // In xi: A = sigma (P4'/4 + P3) / P4^(1/2), sigma the orientation of the map.
  const RationalPoly numerator = Rational(1, 4) * derive(f.p4) + f.p3;
  const auto inv_root = SurdPowerSum::term(Rational(-map.n, 2),
                                           QuadraticSurd(map.orientation()) / QuadraticSurd::sqrt(map.p));
  const SurdPowerSum a_xi = to_power_sum<QuadraticSurd>(numerator) * inv_root;

  // xi = (x/c)^(1/q) = c^(-1/q) x^(1/q); 1/q is an integer for n in {0,1,3,4}
  const Rational inv_q = Rational(1) / map.exponent;
  const auto xi_scale = exact_pow(map.scale, -inv_q);
  if (!xi_scale) throw NonRationalPower("gauge_data: inverse map scale is not exact");

  GaugeData g;
  g.energy_sign = map.energy_sign;
  g.A = substitute(a_xi, *xi_scale, inv_q);
  g.deltaV = substitute(to_power_sum<QuadraticSurd>(f.p2), *xi_scale, inv_q);
  const QuadraticSurd half(Rational(1, 2));
  g.V = g.deltaV + (g.A * g.A).scaled(half) - derive_x(g.A).scaled(half);
  auto anti = integrate_x(g.A);
  g.a_power = std::move(anti.power_part);
  g.log_coeff = anti.log_coeff;
  return g;
}

}  // namespace qeslab
