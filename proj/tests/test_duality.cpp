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

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

using namespace qeslab;
using qeslab::testing::random_rational;
using qeslab::testing::uniform_int;

namespace {

double smooth_u_bar(double rb) { return rb * rb * (1.0 + rb / 3.0) * std::exp(-0.7 * rb); }

Rational mapped_l(const Rational& alpha, const Rational& l) {
  // l_bar + 1/2 = |abar/alpha| (l + 1/2)
  return abs(dual_exponent(alpha) / alpha) * (l + Rational(1, 2)) - Rational(1, 2);
}

}  // namespace

TEST(Duality, KnownPartners) {
  EXPECT_EQ(dual_exponent(Rational(-1)), Rational(2));
  EXPECT_EQ(dual_exponent(Rational(2)), Rational(-1));
  EXPECT_EQ(dual_exponent(Rational(0)), Rational(0));
  EXPECT_EQ(dual_exponent(Rational(-4)), Rational(-4));
  EXPECT_EQ(dual_exponent(Rational(4)), Rational(-4, 3));
  EXPECT_EQ(dual_exponent(Rational(1)), Rational(-2, 3));
  EXPECT_THROW(dual_exponent(Rational(-2)), SingularExponent);
}

TEST(Duality, IntegerPairsAreExactlyTheDivisorsOfFour) {
  const auto pairs = enumerate_integer_duals();
  std::vector<long> alphas;
  for (const auto& p : pairs) {
    alphas.push_back(p.alpha.num().get_si());
    EXPECT_TRUE(p.alpha_bar.is_integer());
  }
  EXPECT_EQ(alphas, (std::vector<long>{-6, -4, -3, -1, 0, 2}));
  EXPECT_EQ(enumerate_integer_duals(1000).size(), 6u);
  EXPECT_THROW(enumerate_integer_duals(5), DomainError);
}

TEST(Duality, AdmissibleIntersection) {
  std::vector<long> both;
  for (const auto& row : classify_exponents(-8, 4))
    if (row.pair_admissible) both.push_back(row.alpha.num().get_si());
  EXPECT_EQ(both, (std::vector<long>{-1, 0, 2}));

  const auto rows = classify_exponents(-3, -2);
  EXPECT_EQ(rows[0].admissibility.reason, "below -2");
  EXPECT_TRUE(rows[0].integer_partner);  // -3 <-> -6
  EXPECT_FALSE(rows[1].alpha_bar.has_value());
  EXPECT_EQ(rows[1].annotation, "singular, no partner");
  EXPECT_EQ(sl2_admissible(Rational(1, 2)).reason, "non-integer");
  EXPECT_TRUE(sl2_admissible(Rational(-2)).admissible);
  EXPECT_EQ(exponent_annotation(Rational(-1)), "Coulomb");
  EXPECT_EQ(exponent_annotation(Rational(4)), "QES only; fractional partner -4/3");
  EXPECT_THROW(classify_exponents(3, 2), DomainError);
}

TEST(DualityProperty, PartnerMapIsAnInvolution) {
  int checked = 0;
  while (checked < 50) {
    const Rational a = random_rational(40, 13);
    if (a == Rational(-2)) continue;
    const Rational b = dual_exponent(a);
    EXPECT_NE(b, Rational(-2));
    EXPECT_EQ(dual_exponent(b), a);
    EXPECT_EQ((a + Rational(2)) * (b + Rational(2)), Rational(4));
    ++checked;
  }
}

TEST(DualityProperty, PartnerMapCommutesWithTheHyperbolicGroupLaw) {
  // s = (alpha + 2)/2 multiplies; the dual inverts s
  for (int i = 0; i < 50; ++i) {
    Rational a = random_rational(30, 7), b = random_rational(30, 7);
    if (a == Rational(-2) || b == Rational(-2)) continue;
    const auto s = [](const Rational& x) { return (x + Rational(2)) / Rational(2); };
    const Rational ab = Rational(2) * s(a) * s(b) - Rational(2);  // s(ab) = s(a) s(b)
    EXPECT_EQ(s(dual_exponent(ab)), s(dual_exponent(a)) * s(dual_exponent(b)));
  }
}

TEST(DualParameters, CoulombGroundStateMapsToOscillator) {
  const RadialParameters coulomb{Rational(-1), Rational(0), Rational(-1, 2)};
  const auto osc = dual_parameters(coulomb, exponent_pair(Rational(-1)));
  EXPECT_EQ(osc.lambda, Rational(2));
  EXPECT_EQ(osc.energy, Rational(4));
  EXPECT_EQ(osc.l, Rational(1, 2));
  // omega = 2: E = omega (2n + l + 3/2) = 4 at n = 0
  EXPECT_EQ(*osc.energy, Rational(2) * (osc.l + Rational(3, 2)));

  const auto back = dual_parameters(osc, exponent_pair(Rational(-1)), Direction::inverse);
  EXPECT_EQ(back, coulomb);
  EXPECT_EQ(dual_parameters(osc, exponent_pair(Rational(2))), coulomb);
}

TEST(DualParameters, RoundTripsOnRandomInputs) {
  for (int i = 0; i < 50; ++i) {
    const RadialParameters p{random_rational(), Rational(uniform_int(0, 6)), random_rational()};
    for (long alpha : {-1L, 2L}) {
      const auto pair = exponent_pair(Rational(alpha));
      const auto fwd = dual_parameters(p, pair);
      EXPECT_EQ(dual_parameters(fwd, pair, Direction::inverse), p);
      if (alpha == -1) {
        EXPECT_EQ(fwd.l, Rational(2) * p.l + Rational(1, 2));
      }
    }
  }
}

TEST(DualParameters, Errors) {
  const RadialParameters p{Rational(-1), Rational(0), Rational(-1, 2)};
  EXPECT_THROW(dual_parameters(p, exponent_pair(Rational(0))), UnsupportedPair);
  EXPECT_THROW(dual_parameters(p, exponent_pair(Rational(-4))), UnsupportedPair);
  EXPECT_THROW(dual_parameters(p, {Rational(-1), Rational(3)}), DomainError);
  EXPECT_THROW(dual_parameters({Rational(-1), Rational(0), std::nullopt}, exponent_pair(Rational(-1))), MissingEnergy);
  EXPECT_THROW(dual_parameters({Rational(2), Rational(-1), Rational(3)}, exponent_pair(Rational(2))), DomainError);
}

TEST(Proportionality, CoulombOscillatorWithDerivedGauge) {
  const RadialParameters coulomb{Rational(-1), Rational(0), Rational(-1, 2)};
  const auto rep = operator_proportionality_check(Rational(-1), coulomb, smooth_u_bar);
  EXPECT_TRUE(rep.passed);
  EXPECT_LT(rep.residual, 1e-6);
  EXPECT_LT(rep.truncation_estimate, 1e-6);
  EXPECT_EQ(rep.points, 4501u);
  EXPECT_EQ(rep.dual.l, Rational(1, 2));
}

TEST(Proportionality, NegatedGaugeFails) {
  const RadialParameters coulomb{Rational(-1), Rational(0), Rational(-1, 2)};
  ProportionalityOptions opt;
  opt.gauge = GaugeExponent::negated;
  const auto rep = operator_proportionality_check(Rational(-1), coulomb, smooth_u_bar, {}, opt);
  EXPECT_FALSE(rep.passed);
  EXPECT_GT(rep.residual, 1e-2);
}

TEST(Proportionality, ZeroFunctionIsTrivial) {
  const auto rep = operator_proportionality_check(Rational(2), {Rational(3), Rational(1), Rational(5)},
                                                  [](double) { return 0.0; });
  EXPECT_EQ(rep.residual, 0.0);
  EXPECT_EQ(rep.scale, 0.0);
  EXPECT_TRUE(rep.passed);
}

TEST(Proportionality, OtherPairsWithSuppliedAngularMomentum) {
  for (const Rational& alpha : {Rational(-4), Rational(-3), Rational(1), Rational(4), Rational(1, 2), Rational(6)}) {
    const RadialParameters p{Rational(3, 2), Rational(1), Rational(-2, 5)};
    const auto rep = operator_proportionality_check(alpha, p, smooth_u_bar, {0.7, 3.0, 2e-3}, {}, mapped_l(alpha, p.l));
    EXPECT_TRUE(rep.passed) << "alpha = " << alpha << " residual " << rep.residual;
    // any other centrifugal term breaks the identity
    const auto bad = operator_proportionality_check(alpha, p, smooth_u_bar, {0.7, 3.0, 2e-3}, {},
                                                    mapped_l(alpha, p.l) + Rational(1, 3));
    EXPECT_FALSE(bad.passed) << "alpha = " << alpha;
  }
}

TEST(Proportionality, Errors) {
  const RadialParameters p{Rational(-1), Rational(0), Rational(-1, 2)};
  EXPECT_THROW(operator_proportionality_check(Rational(-1), {Rational(-1), Rational(0), std::nullopt}, smooth_u_bar),
               MissingEnergy);
  EXPECT_THROW(operator_proportionality_check(Rational(-1), p, smooth_u_bar, {0.0, 5.0, 1e-3}), GridError);
  EXPECT_THROW(operator_proportionality_check(Rational(-1), p, smooth_u_bar, {2.0, 1.0, 1e-3}), GridError);
  EXPECT_THROW(operator_proportionality_check(Rational(-1), p, smooth_u_bar, {0.5, 5.0, 0.0}), GridError);
  EXPECT_THROW(operator_proportionality_check(Rational(0), p, smooth_u_bar), UnsupportedPair);
  EXPECT_THROW(operator_proportionality_check(Rational(-2), p, smooth_u_bar), SingularExponent);
  EXPECT_THROW(operator_proportionality_check(Rational(-4), p, smooth_u_bar), UnsupportedPair);
  const auto wiggly = [](double rb) { return std::sin(25.0 * rb) * std::exp(-rb); };
  EXPECT_THROW(operator_proportionality_check(Rational(-1), p, wiggly, {3.0, 5.0, 0.2}), GridTooCoarse);
}
