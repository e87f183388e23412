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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qeslab/qeslab.hpp"
#include "qeslab_cli.hpp"
#include "test_support.hpp"

using namespace qeslab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0.0 && dt > budget_s) o.require(false, "runtime " + format_double(dt, 3) + " s over budget");
  if (!o.pass) ++failures;
  std::printf("%s %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), dt,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
}

// Every gauge construction exercised by the library's families.
std::vector<GaugeData> gauge_corpus() {
  using qeslab::testing::random_nonzero_rational;
  using qeslab::testing::random_rational;
  using qeslab::testing::uniform_int;
  std::vector<GaugeData> out;
  const auto add = [&](const GeneratorCoefficients& c, SpinLabel j) {
    const auto f = DifferentialForm::from_operator(differential_operator(c, j));
    const int n = f.p4.terms().begin()->first;
    const Branch b = f.p4.coefficient(n).sign() > 0 ? Branch::automatic : Branch::negated;
    const auto map = coordinate_map(f, b);
    out.push_back(gauge_data(f, map));
    out.push_back(gauge_data(f, map.flipped()));
  };
  for (int twice_j = 0; twice_j <= 10; ++twice_j) {
    const SpinLabel j(twice_j);
    for (int trial = 0; trial < 20; ++trial) {
      GeneratorCoefficients c;
      switch (trial % 5) {
        case 0: c.set(Generator::plus, Generator::plus, random_nonzero_rational()); break;
        case 1: c.set(Generator::plus, Generator::zero, random_nonzero_rational()); break;
        case 2: c.set(Generator::zero, Generator::minus, random_nonzero_rational()); break;
        case 3: c.set_minus_zero(random_nonzero_rational()); break;
        case 4: c.set(Generator::minus, Generator::minus, random_nonzero_rational()); break;
      }
      if (uniform_int(0, 1)) {
        const Rational w = random_rational();
        c.set(Generator::plus, Generator::minus, w);
        c.set(Generator::zero, Generator::zero, w);
      }
      for (Generator g : {Generator::plus, Generator::zero, Generator::minus})
        if (uniform_int(0, 1)) c.set(g, random_rational());
      add(c, j);
    }
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "sl(2) commutators and Casimir exact for 2j = 0..10", 1.0, [] {
    Outcome o;
    for (int twice_j = 0; twice_j <= 10; ++twice_j) {
      const SpinLabel j(twice_j);
      const auto tp = generator_matrix(Generator::plus, j).matrix;
      const auto t0 = generator_matrix(Generator::zero, j).matrix;
      const auto tm = generator_matrix(Generator::minus, j).matrix;
      const std::string tag = " at 2j = " + std::to_string(twice_j);
      o.require(tp * t0 - t0 * tp == Rational(-1) * tp, "[T0,T+]" + tag);
      o.require(tm * t0 - t0 * tm == tm, "[T0,T-]" + tag);
      o.require(tp * tm - tm * tp == Rational(2) * t0, "[T+,T-]" + tag);
      const auto cas = t0 * t0 + Rational(1, 2) * (tp * tm + tm * tp);
      o.require(cas == j.j() * (j.j() + Rational(1)) * RationalMatrix::identity(j.dimension()), "Casimir" + tag);
      o.require(verify_algebra(j).failures.empty(), "verify_algebra" + tag);
    }
    return o;
  });

  criterion(2, "j=1 oscillator preset spectrum and eigenvectors", 0.1, [] {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run({"spectrum", "--preset", "paper-j1-oscillator", "--format", "json"}, out, err);
    o.require(code == 0, "preset exit code " + std::to_string(code));
    const Json j = Json::parse(out.str());
    const auto s = j.at("spectrum").get<AlgebraicSpectrum>();
    const double r6 = std::sqrt(6.0);
    const std::vector<double> expected = {-r6, 0.0, r6};
    o.require(s.eigenvalues.size() == 3, "sector dimension");
    for (std::size_t k = 0; k < 3 && k < s.eigenvalues.size(); ++k)
      o.require(std::abs(s.eigenvalues[k] - expected[k]) < 1e-10, "E_" + std::to_string(k));
    const auto vec = [&](std::size_t k) { return s.eigenvectors.at(k); };
    const auto near = [](Complex z, double v) { return std::abs(z - v) < 1e-10; };
    o.require(near(vec(2)[0], 1.0) && near(vec(2)[1], r6) && near(vec(2)[2], 1.0),
              "E = +sqrt6 eigenvector (alpha, beta) = (" + io::complex_str(vec(2)[1]) + ", " +
                  io::complex_str(vec(2)[2]) + "), expected (sqrt6, 1)");
    o.require(near(vec(1)[0], 1.0) && near(vec(1)[1], 0.0) && near(vec(1)[2], -2.0),
              "E = 0 eigenvector (alpha, beta) = (" + io::complex_str(vec(1)[1]) + ", " +
                  io::complex_str(vec(1)[2]) + "), expected (0, -2)");
    return o;
  });

  criterion(3, "integer duals and admissible intersection", 0.1, [] {
    Outcome o;
    std::vector<Rational> alphas, admissible;
    for (const auto& p : enumerate_integer_duals()) alphas.push_back(p.alpha);
    o.require(alphas == std::vector<Rational>{Rational(-6), Rational(-4), Rational(-3), Rational(-1), Rational(0),
                                              Rational(2)},
              "integer duals");
    for (const auto& p : enumerate_integer_duals())
      if (sl2_admissible(p.alpha).admissible && sl2_admissible(p.alpha_bar).admissible) admissible.push_back(p.alpha);
    o.require(admissible == std::vector<Rational>{Rational(-1), Rational(0), Rational(2)}, "admissible set");
    return o;
  });

  criterion(4, "duality maps are exact involutions", 0.0, [] {
    Outcome o;
    int checked = 0;
    while (checked < 50) {
      const Rational a = qeslab::testing::random_rational(60, 17);
      if (a == Rational(-2)) continue;
      const Rational b = dual_exponent(a);
      o.require(dual_exponent(b) == a, "involution at " + a.str());
      o.require((a + Rational(2)) * (b + Rational(2)) == Rational(4), "product at " + a.str());
      const RadialParameters p{qeslab::testing::random_rational(), Rational(checked % 5, 2),
                               qeslab::testing::random_rational()};
      const auto pair = exponent_pair(Rational(checked % 2 ? -1 : 2));
      o.require(dual_parameters(dual_parameters(p, pair), pair, Direction::inverse) == p, "dual_parameters");
      ++checked;
    }
    for (const Rational& l : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
      const Rational lb = dual_parameters({Rational(-1), l, Rational(-1, 2)}, exponent_pair(Rational(-1))).l;
      o.require(lb == Rational(2) * l + Rational(1, 2), "l_bar at l = " + l.str());
      o.require(lb * (lb + Rational(1)) == Rational(4) * l * (l + Rational(1)) + Rational(3, 4),
                "centrifugal identity at l = " + l.str());
    }
    return o;
  });

  criterion(5, "operator proportionality for alpha = -1", 5.0, [] {
    Outcome o;
    const RadialParameters coulomb{Rational(-1), Rational(0), Rational(-1, 2)};
    const auto u_bar = [](double rb) { return rb * rb * std::exp(-rb * rb); };
    const auto rep = operator_proportionality_check(Rational(-1), coulomb, u_bar, {0.5, 5.0, 1e-3});
    o.require(rep.residual < 1e-6, "residual " + format_double(rep.residual, 3));
    o.require(rep.truncation_estimate < rep.residual || rep.truncation_estimate < 1e-6,
              "truncation " + format_double(rep.truncation_estimate, 3));
    if (o.pass)
      o.detail = "residual " + format_double(rep.residual, 3) + ", truncation " +
                 format_double(rep.truncation_estimate, 3);
    return o;
  });

  criterion(6, "hydrogen levels, mapped oscillator and coupling scan", 30.0, [] {
    Outcome o;
    const auto hydrogen = radial_problem(Rational(-1), -1.0, Rational(0));
    const auto s = solve_radial(hydrogen, 2);
    o.require(std::abs(s.eigenvalues[0] + 0.5) <= 5e-4, "E1 = " + format_double(s.eigenvalues[0], 8));
    o.require(std::abs(s.eigenvalues[1] + 0.125) <= 5e-4, "E2 = " + format_double(s.eigenvalues[1], 8));
    const auto dual = verify_duality(hydrogen, 2);
    for (const auto& d : dual.levels)
      o.require(std::abs(d.closest - 4.0) <= 5e-3 && d.oscillator_l == Rational(1, 2),
                "oscillator level " + std::to_string(d.level) + " = " + format_double(d.closest, 8));
    const auto scan = coulomb_couplings_from_oscillator(-0.5, Rational(0), 3);
    for (std::size_t k = 0; k < 3; ++k)
      o.require(std::abs(scan.lambdas[k] + static_cast<double>(k + 1)) <= 1e-2,
                "coupling " + std::to_string(k + 1) + " = " + format_double(scan.lambdas[k], 8));
    return o;
  });

  criterion(7, "gauge identity exact for every gauge construction", 0.0, [] {
    Outcome o;
    const auto corpus = gauge_corpus();
    std::size_t bad = 0;
    for (const auto& g : corpus) bad += gauge_identity_defect(g).empty() ? 0 : 1;
    o.require(bad == 0, std::to_string(bad) + " of " + std::to_string(corpus.size()) + " gauge data inconsistent");
    if (o.pass) o.detail = std::to_string(corpus.size()) + " gauge data";
    return o;
  });

  criterion(8, "crosscheck reports printed discrepancies as disagreements", 0.0, [] {
    Outcome o;
    const auto p4 = paper_claim_crosscheck(ClaimSet::oscillator_p4);
    bool p4_flagged = false;
    for (const auto& c : p4.claims)
      if (c.name == "P4") p4_flagged = !c.agree && !c.printed.empty() && !c.computed.empty();
    o.require(p4_flagged, "P4 factor not flagged");
    const auto cc = paper_claim_crosscheck(ClaimSet::coulomb_constants);
    const auto oc = paper_claim_crosscheck(ClaimSet::oscillator_constants, {SpinLabel(2), Rational(2), Rational(1, 2)});
    o.require(cc.disagreements() >= 2, "Coulomb constants not flagged");
    o.require(oc.disagreements() >= 2, "oscillator constants not flagged");
    const auto cp = paper_claim_crosscheck(ClaimSet::coulomb_polynomials);
    o.require(cp.disagreements() == 0, "Coulomb polynomials should agree");
    if (o.pass)
      o.detail = std::to_string(p4.disagreements() + cc.disagreements() + oc.disagreements()) + " disagreements";
    return o;
  });

  return failures == 0 ? 0 : 1;
}
