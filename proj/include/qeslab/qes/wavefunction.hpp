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
#include <vector>

#include "qeslab/qes/gauge.hpp"

namespace qeslab {

/// psi(x) = psibar(xi(x)) * |x|^(-log_coeff) * exp(-a_power(x)), where
/// psibar has ascending ansatz coefficients `ansatz`.
inline std::vector<double> reconstruct_wavefunction(const std::vector<double>& ansatz,
                                                    const CoordinateMap& map, const GaugeData& gauge,
                                                    const std::vector<double>& xs) {
  const bool integer_map = (Rational(1) / map.exponent).is_integer() && map.exponent.is_integer();
  bool integer_gauge = true;
  for (const auto& [e, c] : gauge.a_power.terms()) integer_gauge = integer_gauge && e.is_integer();
  std::vector<double> psibar_coeffs = ansatz;
  while (!psibar_coeffs.empty() && psibar_coeffs.back() == 0.0) psibar_coeffs.pop_back();

  ensure_real_precision();
  const Real log_coeff = to_real(gauge.log_coeff);
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (psibar_coeffs.empty()) {
      out.push_back(0.0);
      continue;
    }
    if (x <= 0.0 && !(integer_map && integer_gauge))
      throw DomainError("reconstruct_wavefunction: x <= 0 with a non-integer power map");
    if (x == 0.0 && (map.exponent.sign() < 0 || !gauge.log_coeff.is_zero()))
      throw DomainError("reconstruct_wavefunction: x = 0 is singular for this map");
    const double xi = map.xi_of_x(x);
    double psibar = 0.0;
    for (std::size_t m = psibar_coeffs.size(); m-- > 0;) psibar = psibar * xi + psibar_coeffs[m];

    Real exponent = 0;
    const Real xr = x;
    for (const auto& [e, c] : gauge.a_power.terms())
      exponent -= to_real(c) * boost::multiprecision::pow(xr, to_real(e));
    if (!gauge.log_coeff.is_zero()) exponent -= log_coeff * boost::multiprecision::log(boost::multiprecision::abs(xr));
    out.push_back(psibar * boost::multiprecision::exp(exponent).convert_to<double>());
  }
  return out;
}

}  // namespace qeslab
