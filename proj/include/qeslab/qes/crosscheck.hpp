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
#include <functional>
#include <string>
#include <vector>

#include "qeslab/format.hpp"
#include "qeslab/qes/match.hpp"

namespace qeslab {

enum class ClaimSet { coulomb_constants, oscillator_constants, oscillator_p4, coulomb_polynomials };

inline std::string claim_set_name(ClaimSet which) {
  switch (which) {
    case ClaimSet::coulomb_constants: return "coulomb_constants";
    case ClaimSet::oscillator_constants: return "oscillator_constants";
    case ClaimSet::oscillator_p4: return "oscillator_p4";
    case ClaimSet::coulomb_polynomials: return "coulomb_polynomials";
  }
  return "?";
}

inline ClaimSet parse_claim_set(const std::string& name) {
  for (ClaimSet c : {ClaimSet::coulomb_constants, ClaimSet::oscillator_constants, ClaimSet::oscillator_p4,
                     ClaimSet::coulomb_polynomials})
    if (claim_set_name(c) == name) return c;
  throw ParseError("unknown crosscheck '" + name + "'");
}

/// Inputs of the printed formulas. For the oscillator sets lambda and l
/// are the barred coupling and angular momentum.
struct CrosscheckParameters {
  SpinLabel j{2};
  Rational lambda{1};
  Rational l{0};

  friend bool operator==(const CrosscheckParameters&, const CrosscheckParameters&) = default;
};

struct Claim {
  std::string name;
  std::string printed;       // formula as printed
  std::string printed_value; // formula evaluated at the report parameters
  std::string computed;      // value derived by this library
  bool agree = false;
  std::string note;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct CrosscheckReport {
  ClaimSet which = ClaimSet::oscillator_p4;
  CrosscheckParameters parameters;
  std::vector<Claim> claims;

  std::size_t disagreements() const {
    std::size_t n = 0;
    for (const auto& c : claims) n += c.agree ? 0 : 1;
    return n;
  }

  friend bool operator==(const CrosscheckReport&, const CrosscheckReport&) = default;
};

namespace detail {

using CouplingValues = std::vector<Rational>;
using PolyFormula = std::function<RationalPoly(const SpinLabel&, const CouplingValues&)>;

// Renders a polynomial that is linear in the couplings as sum_i C_i*(poly_i).
inline std::string linear_form_str(const PolyFormula& f, const SpinLabel& j, const std::vector<std::string>& names) {
  std::string out;
  const CouplingValues zero(names.size(), Rational(0));
  const RationalPoly base = f(j, zero);
  if (!base.is_zero()) out = base.str();
  for (std::size_t i = 0; i < names.size(); ++i) {
    CouplingValues e = zero;
    e[i] = Rational(1);
    const RationalPoly part = f(j, e) - base;
    if (part.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += names[i] + "*[" + part.str() + "]";
  }
  return out.empty() ? "0" : out;
}

// Compares two coupling-linear formulas on a spread of spins and couplings.
inline bool formulas_agree(const PolyFormula& a, const PolyFormula& b, std::size_t couplings) {
  const std::vector<Rational> samples = {Rational(3, 7), Rational(-5, 11), Rational(2), Rational(-1, 3)};
  for (int twice_j = 0; twice_j <= 6; ++twice_j) {
    const SpinLabel j(twice_j);
    for (std::size_t s = 0; s < samples.size(); ++s) {
      CouplingValues v(couplings);
      for (std::size_t i = 0; i < couplings; ++i) v[i] = samples[(s + i) % samples.size()];
      if (!(a(j, v) == b(j, v))) return false;
    }
  }
  return true;
}

inline RationalPoly mono(int degree, const Rational& c) { return RationalPoly::monomial(degree, c); }

inline void polynomial_claims(CrosscheckReport& report, const std::vector<std::string>& names,
                              const std::function<GeneratorCoefficients(const CouplingValues&)>& coeffs,
                              const std::vector<std::pair<std::string, PolyFormula>>& printed,
                              const std::string& note_on_disagreement) {
  const SpinLabel j = report.parameters.j;
  for (std::size_t slot = 0; slot < printed.size(); ++slot) {
    const PolyFormula computed = [&, slot](const SpinLabel& jj, const CouplingValues& v) {
      const auto form = DifferentialForm::from_operator(differential_operator(coeffs(v), jj));
      return slot == 0 ? form.p4 : slot == 1 ? form.p3 : form.p2;
    };
    Claim claim;
    claim.name = std::string("P") + std::to_string(4 - static_cast<int>(slot));
    claim.printed = printed[slot].first;
    claim.printed_value = linear_form_str(printed[slot].second, j, names);
    claim.computed = linear_form_str(computed, j, names);
    claim.agree = formulas_agree(printed[slot].second, computed, names.size());
    if (!claim.agree) claim.note = note_on_disagreement;
    report.claims.push_back(std::move(claim));
  }
}

inline std::string witness_str(const MatchResult& m) {
  if (m.feasible) return "feasible";
  return "infeasible at x^" + (m.witness_exponent ? m.witness_exponent->str() : std::string("?")) + ": " + m.reason;
}

}  // namespace detail

/// Evaluates printed closed forms for the Coulomb and oscillator
/// realizations and compares each with the value derived here. Every
/// disagreement is reported as such; nothing is reconciled.
inline CrosscheckReport paper_claim_crosscheck(ClaimSet which, const CrosscheckParameters& params = {}) {
  using detail::CouplingValues;
  using detail::mono;
  CrosscheckReport report;
  report.which = which;
  report.parameters = params;
  const SpinLabel j = params.j;
  const Rational jr = j.j();
  const Rational k = j.k();

  switch (which) {
    case ClaimSet::coulomb_polynomials: {
      const auto coeffs = [](const CouplingValues& v) {
        GeneratorCoefficients c;
        c.set(Generator::plus, Generator::plus, v[0]);
        c.set(Generator::plus, v[1]);
        return c;
      };
      detail::polynomial_claims(
          report, {"C_{++}", "C_{+}"}, coeffs,
          {{"-2*C_{++}*xi^4", [](const SpinLabel&, const CouplingValues& v) { return mono(4, Rational(-2) * v[0]); }},
           {"-2*k*C_{++}*xi^3 - C_{+}*xi^2",
            [](const SpinLabel& jj, const CouplingValues& v) {
              return mono(3, Rational(-2) * jj.k() * v[0]) + mono(2, -v[1]);
            }},
           {"2*j*k*C_{++}*xi^2 + 2*j*C_{+}*xi",
            [](const SpinLabel& jj, const CouplingValues& v) {
              return mono(2, Rational(2) * jj.j() * jj.k() * v[0]) + mono(1, Rational(2) * jj.j() * v[1]);
            }}},
          "printed polynomial differs from the generator expansion");
      break;
    }
    case ClaimSet::oscillator_p4: {
      const auto coeffs = [](const CouplingValues& v) {
        GeneratorCoefficients c;
        c.set_minus_zero(v[0]);
        c.set(Generator::plus, v[1]);
        return c;
      };
      detail::polynomial_claims(
          report, {"C_{-0}", "C_{+}"}, coeffs,
          {{"-4*C_{-0}*xi", [](const SpinLabel&, const CouplingValues& v) { return mono(1, Rational(-4) * v[0]); }},
           {"-C_{+}*xi^2 - k*C_{-0}",
            [](const SpinLabel& jj, const CouplingValues& v) { return mono(2, -v[1]) + mono(0, -jj.k() * v[0]); }},
           {"2*j*C_{+}*xi",
            [](const SpinLabel& jj, const CouplingValues& v) { return mono(1, Rational(2) * jj.j() * v[1]); }}},
          "T^-0 taken as T-T0 + jT- (action m^2 xi^(m-1)), the convention that reproduces the j=1 spectrum");
      break;
    }
    case ClaimSet::coulomb_constants: {
      const double lambda = params.lambda.to_double();
      const double L = (params.l * (params.l + Rational(1)) / Rational(2)).to_double();
      const double kk = k.to_double();
      // printed: C+ = -lambda/(6+2j); -2C(4+k)^2 - sqrt(-2C)(4+k) = L, s = sqrt(-2C) >= 0
      const double c_plus = -lambda / (6.0 + 2.0 * jr.to_double());
      const double a = (4.0 + kk) * (4.0 + kk), b = -(4.0 + kk);
      const double s = (-b + std::sqrt(b * b + 4.0 * a * L)) / (2.0 * a);
      const double c_pp = -s * s / 2.0;

      RationalPowerSum target;
      target.add_term(Rational(-1), params.lambda);
      target.add_term(Rational(-2), params.l * (params.l + Rational(1)) / Rational(2));
      const MatchResult matched = match_couplings(target, coulomb_family(j));

      Claim cp{"C_{+}", "-lambda/(6+2j)", format_double(c_plus), detail::witness_str(matched), false,
               "the matched Coulomb target admits no couplings in this family"};
      Claim cpp{"C_{++}", "-2*C_{++}*(4+k)^2 - sqrt(-2*C_{++})*(4+k) = l(l+1)/2", format_double(c_pp),
                detail::witness_str(matched), false, "the matched Coulomb target admits no couplings in this family"};
      if (matched.feasible && !matched.solutions.empty()) {
        const auto& sol = matched.solutions.front();
        cpp.computed = format_double(sol.values[0]);
        cp.computed = format_double(sol.values[1]);
        cpp.agree = std::abs(sol.values[0] - c_pp) <= 1e-9 * std::max(1.0, std::abs(c_pp));
        cp.agree = std::abs(sol.values[1] - c_plus) <= 1e-9 * std::max(1.0, std::abs(c_plus));
        cp.note = cpp.note = "";
      }
      report.claims.push_back(cp);
      report.claims.push_back(cpp);

      // potential realized at the printed constants (exact C+ and the nearest representable C++)
      GeneratorCoefficients c;
      c.set(Generator::plus, Generator::plus, Rational::from_double(c_pp));
      c.set(Generator::plus, -params.lambda / (Rational(6) + Rational(2) * jr));
      Claim vclaim{"V(printed constants)", "lambda/x + l(l+1)/(2x^2)", target.str(), "", false, ""};
      try {
        const DifferentialForm form = DifferentialForm::from_operator(differential_operator(c, j));
        const CoordinateMap map = coordinate_map(form);
        const auto g = gauge_data(form, map);
        vclaim.computed = g.V.str();
        vclaim.note = "this family yields a constant potential, C_{+}^2/(2p) with p = -2C_{++}";
      } catch (const Error& e) {
        vclaim.computed = std::string("error: ") + e.what();
      }
      report.claims.push_back(vclaim);
      break;
    }
    case ClaimSet::oscillator_constants: {
      const double lambda = params.lambda.to_double();
      const double L = (params.l * (params.l + Rational(1)) / Rational(2)).to_double();
      const double kk = k.to_double();
      // printed: t = -C_-0; t(4+k)^2/4 - sqrt(t(4+k))/2 = L; with w = sqrt(t(4+k)):
      // (4+k)w^2/4 - w/2 - L = 0
      const double qa = (4.0 + kk) / 4.0;
      const double w = (0.5 + std::sqrt(0.25 + 4.0 * qa * L)) / (2.0 * qa);
      const double t = w * w / (4.0 + kk);
      const double c_m0 = -t;
      const double c_plus = -lambda / (1.0 - kk + 3.0 / (2.0 * std::sqrt(t)));

      MatchOptions soft;
      soft.impose_extra_terms = false;
      RationalPowerSum coupling_only;
      coupling_only.add_term(Rational(2), params.lambda);
      const MatchResult matched = match_couplings(coupling_only, oscillator_family(j), soft);

      RationalPowerSum full = coupling_only;
      full.add_term(Rational(-2), params.l * (params.l + Rational(1)) / Rational(2));
      const MatchResult full_match = match_couplings(full, oscillator_family(j), soft);

      Claim cm0{"C_{-0}", "-C_{-0}*(4+k)^2/4 - sqrt(-C_{-0}*(4+k))/2 = l(l+1)/2", format_double(c_m0), "", false, ""};
      Claim cpl{"C_{+}", "C_{+}*(1 - k + 3/(2*sqrt(-C_{-0}))) = -lambda", format_double(c_plus), "", false, ""};
      if (matched.feasible && !matched.solutions.empty()) {
        const auto& sol = matched.solutions.front();
        cm0.computed = format_double(sol.values[0]);
        cpl.computed = format_double(sol.values[1]);
        cm0.agree = std::abs(sol.values[0] - c_m0) <= 1e-9 * std::max(1.0, std::abs(c_m0));
        cpl.agree = std::abs(sol.values[1] - c_plus) <= 1e-9 * std::max(1.0, std::abs(c_plus));
        cm0.note = "C_{-0} is fixed by the coordinate normalization, not by l";
        cpl.note = "matched coupling is lambda/(2j+1); the x^6 term " +
                   std::string("remains as a residual of this family");
      } else {
        cm0.computed = cpl.computed = detail::witness_str(matched);
      }
      if (cm0.agree) cm0.note.clear();
      if (cpl.agree) cpl.note.clear();
      report.claims.push_back(cm0);
      report.claims.push_back(cpl);

      Claim centrifugal{"centrifugal x^-2", "l(l+1)/2", format_double(L), "", false, ""};
      if (full_match.feasible && !full_match.solutions.empty()) {
        centrifugal.computed = "feasible";
        centrifugal.agree = true;
      } else {
        centrifugal.computed = "-1/8 (fixed by the family); " + detail::witness_str(full_match);
        centrifugal.note = "the x^-2 coefficient does not depend on the couplings";
      }
      report.claims.push_back(centrifugal);
      break;
    }
  }
  return report;
}

}  // namespace qeslab
