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
using qeslab::testing::random_nonzero_rational;
using qeslab::testing::uniform_int;

namespace {

RationalPowerSum target_of(std::initializer_list<std::pair<Rational, Rational>> terms) {
  RationalPowerSum out;
  for (const auto& [e, c] : terms) out.add_term(e, c);
  return out;
}

const ExponentCheck* check_at(const CouplingSolution& s, const Rational& e) {
  for (const auto& c : s.checks)
    if (c.exponent == e) return &c;
  return nullptr;
}

// Rebuild V from a solution and compare against the target coefficient by
// coefficient; constant terms go into the energy shift.
void expect_reproduces(const RationalPowerSum& target, const CouplingFamily& family, const CouplingSolution& s,
                       const MatchOptions& options, double tol) {
  GeneratorCoefficients c = family.fixed;
  for (std::size_t i = 0; i < family.unknowns.size(); ++i)
    family.unknowns[i].assign(c, s.exact[i] ? *s.exact[i] : Rational::from_double(s.values[i]));
  const auto form = DifferentialForm::from_operator(differential_operator(c, family.j));
  const auto g = gauge_data(form, coordinate_map(form, options.branch));
  std::set<Rational> exps;
  for (const auto& [e, v] : target.terms()) exps.insert(e);
  for (const auto& [e, v] : g.V.terms()) exps.insert(e);
  for (const auto& e : exps) {
    const double got = g.V.coefficient(e).to_double();
    if (e.is_zero()) {
      EXPECT_NEAR(got - target.coefficient(e).to_double(), s.energy_shift, tol);
      continue;
    }
    const ExponentCheck* chk = check_at(s, e);
    ASSERT_NE(chk, nullptr) << "x^" << e;
    EXPECT_NEAR(chk->achieved, got, tol) << "x^" << e;
    if (chk->hard) {
      EXPECT_NEAR(got, target.coefficient(e).to_double(), tol) << "x^" << e;
    }
  }
}

}  // namespace

TEST(MatchCouplings, WeightFamilyReachesAHarmonicTerm) {
  const auto family = weight_family(SpinLabel(2));
  const auto target = target_of({{Rational(2), Rational(9, 2)}});
  const auto r = match_couplings(target, family);
  ASSERT_TRUE(r.feasible) << r.reason;
  EXPECT_EQ(r.unknown_names, (std::vector<std::string>{"C_{-0}", "C_{0}"}));
  ASSERT_EQ(r.solutions.size(), 2u);
  const auto& lo = r.solutions[0];
  const auto& hi = r.solutions[1];
  EXPECT_EQ(lo.exact[0], Rational(-2));
  EXPECT_EQ(lo.exact[1], Rational(-6));
  EXPECT_EQ(hi.exact[1], Rational(6));
  EXPECT_DOUBLE_EQ(lo.energy_shift, 9.0);
  EXPECT_DOUBLE_EQ(hi.energy_shift, -9.0);
  EXPECT_TRUE(lo.exact_match);
  // the centrifugal remainder does not depend on the couplings and is only reported
  const ExponentCheck* centrifugal = check_at(lo, Rational(-2));
  ASSERT_NE(centrifugal, nullptr);
  EXPECT_FALSE(centrifugal->hard);
  EXPECT_FALSE(centrifugal->depends_on_unknowns);
  EXPECT_DOUBLE_EQ(centrifugal->achieved, -0.125);
  for (const auto& s : r.solutions) expect_reproduces(target, family, s, {}, 1e-12);
}

TEST(MatchCouplings, OscillatorFamilyWithExtraTermsImposedIsInfeasible) {
  const auto r = match_couplings(target_of({{Rational(2), Rational(1, 2)}}), oscillator_family(SpinLabel(2)));
  EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(r.witness_exponent.has_value());
  EXPECT_FALSE(r.reason.empty());
}

TEST(MatchCouplings, OscillatorFamilySoftExtraTerms) {
  for (int twice_j = 0; twice_j <= 6; ++twice_j) {
    const SpinLabel j(twice_j);
    const Rational lambda(1, 2);
    MatchOptions options;
    options.impose_extra_terms = false;
    const auto family = oscillator_family(j);
    const auto target = target_of({{Rational(2), lambda}});
    const auto r = match_couplings(target, family, options);
    ASSERT_TRUE(r.feasible);
    ASSERT_EQ(r.solutions.size(), 1u);
    const auto& s = r.solutions[0];
    EXPECT_EQ(s.exact[0], Rational(-2));
    EXPECT_EQ(s.exact[1], lambda / Rational(twice_j + 1));
    const ExponentCheck* sextic = check_at(s, Rational(6));
    ASSERT_NE(sextic, nullptr);
    EXPECT_FALSE(sextic->hard);
    EXPECT_TRUE(sextic->depends_on_unknowns);
    const double cp = (lambda / Rational(twice_j + 1)).to_double();
    EXPECT_NEAR(sextic->residual, cp * cp / 8.0, 1e-15);
    expect_reproduces(target, family, s, options, 1e-12);
  }
}

TEST(MatchCouplings, CoulombFamilyCannotProduceACoulombTerm) {
  const auto coulomb = target_of({{Rational(-1), Rational(-1)}});
  const auto r = match_couplings(coulomb, coulomb_family(SpinLabel(2)));
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.witness_exponent, Rational(-1));
  EXPECT_NE(r.reason.find("x^-1"), std::string::npos);

  // with a centrifugal term the lowest unreachable power is reported
  const auto with_l = target_of({{Rational(-1), Rational(-1)}, {Rational(-2), Rational(1)}});
  const auto r2 = match_couplings(with_l, coulomb_family(SpinLabel(2)));
  EXPECT_FALSE(r2.feasible);
  EXPECT_EQ(r2.witness_exponent, Rational(-2));
}

TEST(MatchCouplings, CoulombFamilyConstantPotential) {
  // V = C_+^2 / (2 p) with p = 1 once the scale is normalized
  const auto r = match_couplings(RationalPowerSum(), coulomb_family(SpinLabel(4)));
  ASSERT_TRUE(r.feasible);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.solutions[0].exact[0], Rational(-1, 2));
  // only the constant depends on C_+, so it stays free and lands in the shift
  EXPECT_TRUE(r.solutions[0].free[1]);
  EXPECT_EQ(r.solutions[0].energy_shift, 0.0);
}

TEST(MatchCouplings, FreeFamilyFixesTheKineticScale) {
  const auto r = match_couplings(RationalPowerSum(), free_family(SpinLabel(3)));
  ASSERT_TRUE(r.feasible);
  ASSERT_EQ(r.solutions.size(), 1u);
  EXPECT_EQ(r.solutions[0].exact[0], Rational(-1, 2));
  EXPECT_EQ(r.solutions[0].energy_shift, 0.0);
  ASSERT_EQ(r.notes.size(), 1u);
  EXPECT_NE(r.notes[0].find("C_{--} = -1/2"), std::string::npos);
}

TEST(MatchCouplings, NegatedBranchFixesTheOppositeSign) {
  MatchOptions options;
  options.branch = Branch::negated;
  const auto r = match_couplings(RationalPowerSum(), free_family(SpinLabel(1)), options);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.solutions[0].exact[0], Rational(1, 2));
}

TEST(MatchCouplings, CoupledUnknownsUseTheNumericalSolver) {
  // x^2 and x^4 each involve both C_0 and C_+
  CouplingFamily family{SpinLabel(2), {}, {CouplingSlot::linear(Generator::zero), CouplingSlot::linear(Generator::plus)}};
  family.fixed.set_minus_zero(Rational(-2));
  MatchOptions options;
  options.impose_extra_terms = false;
  const auto target = target_of({{Rational(2), Rational(3)}, {Rational(4), Rational(1, 5)}});
  const auto r = match_couplings(target, family, options);
  ASSERT_TRUE(r.feasible) << r.reason;
  // eliminating C_+ leaves a cubic in C_0 with three real roots
  ASSERT_EQ(r.solutions.size(), 3u);
  for (const auto& s : r.solutions) {
    EXPECT_FALSE(s.exact_match);
    for (const auto& c : s.checks) {
      if (c.hard) {
        EXPECT_LT(std::abs(c.residual), 1e-9);
      }
    }
    expect_reproduces(target, family, s, options, 1e-8);
  }
}

TEST(MatchCouplings, UnsupportedFamilies) {
  CouplingFamily four{SpinLabel(2),
                      {},
                      {CouplingSlot::minus_zero(), CouplingSlot::linear(Generator::plus),
                       CouplingSlot::linear(Generator::zero), CouplingSlot::linear(Generator::minus)}};
  EXPECT_THROW(match_couplings(RationalPowerSum(), four), UnsupportedFamily);

  CouplingFamily two_in_p4{SpinLabel(2), {},
                           {CouplingSlot::minus_zero(), CouplingSlot::quadratic(Generator::zero, Generator::minus)}};
  EXPECT_THROW(match_couplings(RationalPowerSum(), two_in_p4), UnsupportedFamily);

  MatchOptions raw;
  raw.normalize_scale = false;
  EXPECT_THROW(match_couplings(RationalPowerSum(), free_family(SpinLabel(2)), raw), UnsupportedFamily);

  CouplingFamily mixed{SpinLabel(2), {}, {CouplingSlot::linear(Generator::plus)}};
  mixed.fixed.set(Generator::plus, Generator::plus, Rational(1));
  mixed.fixed.set(Generator::minus, Generator::minus, Rational(1));
  EXPECT_THROW(match_couplings(RationalPowerSum(), mixed), NonMonomial);

  CouplingFamily first_order{SpinLabel(2), {}, {CouplingSlot::linear(Generator::plus)}};
  EXPECT_THROW(match_couplings(RationalPowerSum(), first_order), NonMonomial);

  CouplingFamily exponential{SpinLabel(2), {}, {CouplingSlot::linear(Generator::plus)}};
  exponential.fixed.set(Generator::zero, Generator::zero, Rational(1));
  EXPECT_THROW(match_couplings(RationalPowerSum(), exponential), ExponentialCase);
}

TEST(MatchCouplings, SlotNames) {
  EXPECT_EQ(CouplingSlot::quadratic(Generator::plus, Generator::plus).name(), "C_{++}");
  EXPECT_EQ(CouplingSlot::linear(Generator::plus).name(), "C_{+}");
  EXPECT_EQ(CouplingSlot::minus_zero().name(), "C_{-0}");
}

TEST(MatchProperty, RecoversPlantedWeightCouplings) {
  for (int trial = 0; trial < 25; ++trial) {
    const SpinLabel j(static_cast<int>(uniform_int(0, 6)));
    const Rational c0 = random_nonzero_rational();
    GeneratorCoefficients planted;
    planted.set_minus_zero(Rational(-2));
    planted.set(Generator::zero, c0);
    const auto form = DifferentialForm::from_operator(differential_operator(planted, j));
    const auto V = gauge_data(form, coordinate_map(form)).V;
    RationalPowerSum target;
    for (const auto& [e, c] : V.terms())
      if (!e.is_zero()) target.add_term(e, *c.as_rational());
    const auto r = match_couplings(target, weight_family(j));
    ASSERT_TRUE(r.feasible);
    bool seen = false;
    for (const auto& s : r.solutions) {
      EXPECT_TRUE(s.exact_match);
      if (s.exact[1] == c0) {
        seen = true;
        EXPECT_NEAR(s.energy_shift, V.coefficient(Rational(0)).to_double(), 1e-12);
      }
    }
    EXPECT_TRUE(seen) << "C_0 = " << c0;
  }
}
