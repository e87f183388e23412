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

// Walks one Coulomb level through the oscillator partner and back.

#include <cstdio>

#include "qeslab/qeslab.hpp"

int main() {
  using namespace qeslab;

  const ExponentPair pair = exponent_pair(Rational(-1));
  std::printf("alpha = %s, alpha_bar = %s\n", pair.alpha.str().c_str(), pair.alpha_bar.str().c_str());

  const SpectrumResult hydrogen = solve_radial(radial_problem(Rational(-1), -1.0, Rational(0)), 2);
  const DualityReport report = verify_duality(radial_problem(Rational(-1), -1.0, Rational(0)), 2);
  for (const auto& level : report.levels)
    std::printf("n = %zu  E = %.6f  lambda_bar = %.6f  oscillator level %zu = %.6f (expected %.1f)\n", level.level,
                level.coulomb_energy, level.oscillator_lambda, level.oscillator_index + 1, level.closest,
                level.expected);

  // The oscillator realized on the 2j+1 = 3 polynomial sector.
  GeneratorCoefficients c;
  c.set_minus_zero(Rational(1));
  c.set(Generator::plus, Rational(1));
  const Sl2Operator op = assemble(c, SpinLabel(2));
  const AlgebraicSpectrum spectrum = algebraic_spectrum(op);
  std::printf("algebraic sector:");
  for (const auto& e : spectrum.eigenvalues) std::printf(" %.10f", e.real());
  std::printf("\n");
  const GaugeData gauge = gauge_data(op.form, coordinate_map(op.form, Branch::negated));
  std::printf("V(x) = %s\n", gauge.V.str().c_str());
  return hydrogen.eigenvalues.size() == 2 && report.passed() ? 0 : 1;
}
