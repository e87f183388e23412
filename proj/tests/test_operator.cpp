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

#include "test_support.hpp"

using namespace qeslab;
using qeslab::testing::random_coefficients;

namespace {

RationalPoly xi_pow(int n, const Rational& c) { return RationalPoly::monomial(n, c); }

}  // namespace

TEST(Assemble, PureSecondDerivative) {
  GeneratorCoefficients c;
  c.set(Generator::minus, Generator::minus, Rational(-1, 2));
  const auto op = assemble(c, SpinLabel(4));
  EXPECT_EQ(op.form.p4, xi_pow(0, Rational(1)));
  EXPECT_TRUE(op.form.p3.is_zero());
  EXPECT_TRUE(op.form.p2.is_zero());
}

TEST(Assemble, CoulombFamilyPolynomials) {
  const Rational cpp(3, 7), cp(-5, 2);
  for (int twice_j = 0; twice_j <= 6; ++twice_j) {
    const SpinLabel j(twice_j);
    GeneratorCoefficients c;
    c.set(Generator::plus, Generator::plus, cpp);
    c.set(Generator::plus, cp);
    const auto op = assemble(c, j);
    const Rational k = j.k(), jj = j.j();
    EXPECT_EQ(op.form.p4, xi_pow(4, Rational(-2) * cpp));
    EXPECT_EQ(op.form.p3, xi_pow(3, Rational(-2) * k * cpp) + xi_pow(2, -cp));
    EXPECT_EQ(op.form.p2, xi_pow(2, Rational(2) * jj * k * cpp) + xi_pow(1, Rational(2) * jj * cp));
  }
}

TEST(Assemble, MinusZeroConvention) {
  GeneratorCoefficients c;
  c.set_minus_zero(Rational(3));
  const auto op = assemble(c, SpinLabel(3));
  EXPECT_EQ(op.form.p4, xi_pow(1, Rational(-6)));
  EXPECT_EQ(op.form.p3, xi_pow(0, Rational(3)));
  EXPECT_TRUE(op.form.p2.is_zero());
  // action on xi^m is 3 m^2 xi^(m-1)
  for (std::size_t m = 1; m < 4; ++m) EXPECT_EQ(op.matrix(m - 1, m), Rational(3 * static_cast<long>(m * m)));
}

TEST(Assemble, PaperOscillatorMatrix) {
  GeneratorCoefficients c;
  c.set_minus_zero(Rational(1));
  c.set(Generator::plus, Rational(1));
  const auto op = assemble(c, SpinLabel(2));
  const long expected[3][3] = {{0, 1, 0}, {2, 0, 4}, {0, 1, 0}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t col = 0; col < 3; ++col) EXPECT_EQ(op.matrix(r, col), Rational(expected[r][col]));
  // H psibar = alpha + (4 beta + 2) xi + alpha xi^2 for psibar = 1 + alpha xi + beta xi^2
  const Rational alpha(5, 3), beta(-2, 7);
  const auto image = op.form.apply(RationalPoly::from_coefficients({Rational(1), alpha, beta}));
  EXPECT_EQ(image, RationalPoly::from_coefficients({alpha, Rational(4) * beta + Rational(2), alpha}));
}

TEST(Assemble, EmptyCoefficientsAreRejected) {
  EXPECT_THROW(assemble(GeneratorCoefficients{}, SpinLabel(2)), DomainError);
}

TEST(AssembleProperty, FormReproducesMatrixColumns) {
  for (int trial = 0; trial < 60; ++trial) {
    const SpinLabel j(static_cast<int>(qeslab::testing::uniform_int(0, 8)));
    const auto op = assemble(random_coefficients(), j);
    EXPECT_TRUE(form_matches_matrix(op));
    for (std::size_t col = 0; col < j.dimension(); ++col) {
      const auto image = op.form.apply(xi_pow(static_cast<int>(col), Rational(1)));
      ASSERT_LE(image.degree(), j.twice_j());
      const auto dense = image.dense(j.dimension());
      for (std::size_t row = 0; row < j.dimension(); ++row) EXPECT_EQ(dense[row], op.matrix(row, col));
    }
  }
}

TEST(AssembleProperty, LinearInTheCoefficients) {
  for (int trial = 0; trial < 30; ++trial) {
    const SpinLabel j(static_cast<int>(qeslab::testing::uniform_int(0, 6)));
    const auto a = random_coefficients(), b = random_coefficients();
    GeneratorCoefficients sum = a;
    for (const auto& [ab, v] : b.quadratic) sum.set(ab.first, ab.second, (a.quadratic.count(ab) ? a.quadratic.at(ab) : Rational(0)) + v);
    for (const auto& [g, v] : b.linear) sum.set(g, (a.linear.count(g) ? a.linear.at(g) : Rational(0)) + v);
    if (b.minus_zero) sum.set_minus_zero(a.minus_zero.value_or(Rational(0)) + *b.minus_zero);
    if (sum.empty()) continue;
    const auto fa = DifferentialForm::from_operator(differential_operator(a, j));
    const auto fb = DifferentialForm::from_operator(differential_operator(b, j));
    const auto fs = DifferentialForm::from_operator(differential_operator(sum, j));
    EXPECT_EQ(fs.p4, fa.p4 + fb.p4);
    EXPECT_EQ(fs.p3, fa.p3 + fb.p3);
    EXPECT_EQ(fs.p2, fa.p2 + fb.p2);
    EXPECT_EQ(operator_matrix(sum, j), operator_matrix(a, j) + operator_matrix(b, j));
  }
}

TEST(AssembleProperty, DegreeNeverLeavesTheSector) {
  for (int trial = 0; trial < 40; ++trial) {
    const SpinLabel j(static_cast<int>(qeslab::testing::uniform_int(0, 8)));
    const auto op = assemble(random_coefficients(), j);
    EXPECT_LE(op.form.p4.degree(), 4);
    EXPECT_LE(op.form.p3.degree(), 3);
    EXPECT_LE(op.form.p2.degree(), 2);
    const auto top = op.form.apply(xi_pow(j.twice_j(), Rational(1)));
    EXPECT_LE(top.degree(), j.twice_j());
  }
}
