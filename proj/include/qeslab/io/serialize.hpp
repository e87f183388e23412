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

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <type_traits>
#include <string>
#include <vector>

#include <json.hpp>
#include "qeslab/duality.hpp"
#include "qeslab/format.hpp"
#include "qeslab/qes.hpp"
#include "qeslab/radial.hpp"

// JSON shapes. Rationals and surds are strings ("n/d", "a+b*sqrt(d)"),
// doubles are strings with 17 significant digits so that every document
// re-parses to the identical value.

namespace qeslab {

using Json = nlohmann::json;

namespace io {

inline std::string num(double v) { return format_double(v, 17); }

// strtod accepts subnormals and inf/nan, unlike std::stod
inline double to_double(const std::string& s) {
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front()))) throw ParseError("bad number '" + s + "'");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw ParseError("bad number '" + s + "'");
  return v;
}
inline double parse_num(const Json& j) {
  if (j.is_number()) return j.get<double>();
  return to_double(j.get<std::string>());
}

inline std::string complex_str(const Complex& z) {
  if (z.imag() == 0.0) return num(z.real());
  std::string im = num(z.imag());
  if (im.front() != '-') im = "+" + im;
  return num(z.real()) + im + "i";
}
inline Complex parse_complex(const std::string& s) {
  if (s.empty()) throw ParseError("empty complex number");
  if (s.back() != 'i') return {to_double(s), 0.0};
  // split at the last sign that does not follow an exponent marker
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      return {to_double(s.substr(0, k)), to_double(s.substr(k, s.size() - k - 1))};
    }
  }
  return {0.0, to_double(s.substr(0, s.size() - 1))};
}

inline Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return Rational::parse(j.get<std::string>());
}

template <class C>
std::string coeff_json(const C& c) {
  return c.str();
}

template <class C>
C parse_coeff(const Json& j) {
  if constexpr (std::is_same_v<C, Rational>)
    return parse_rational(j);
  else
    return QuadraticSurd::parse(j.get<std::string>());
}

inline std::vector<std::string> nums(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(num(x));
  return out;
}
inline std::vector<double> parse_nums(const Json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(parse_num(x));
  return out;
}

}  // namespace io

// --- algebra -----------------------------------------------------------

inline void to_json(Json& j, const Rational& r) { j = r.str(); }
inline void from_json(const Json& j, Rational& r) { r = io::parse_rational(j); }
inline void to_json(Json& j, const QuadraticSurd& s) { j = s.str(); }
inline void from_json(const Json& j, QuadraticSurd& s) { s = QuadraticSurd::parse(j.get<std::string>()); }

template <class C>
void to_json(Json& j, const Poly<C>& p) {
  j = Json::object();
  for (const auto& [m, c] : p.terms()) j[std::to_string(m)] = io::coeff_json(c);
}
template <class C>
void from_json(const Json& j, Poly<C>& p) {
  p = Poly<C>();
  for (const auto& [k, v] : j.items()) p.add_term(std::stoi(k), io::parse_coeff<C>(v));
}

template <class C>
void to_json(Json& j, const PowerSum<C>& p) {
  j = Json::object();
  for (const auto& [e, c] : p.terms()) j[e.str()] = io::coeff_json(c);
}
template <class C>
void from_json(const Json& j, PowerSum<C>& p) {
  p = PowerSum<C>();
  for (const auto& [k, v] : j.items()) p.add_term(Rational::parse(k), io::parse_coeff<C>(v));
}

// --- sl2rep / operator ---------------------------------------------------

inline std::string coefficient_key(Generator a, Generator b) { return generator_name(a) + "," + generator_name(b); }

inline void to_json(Json& j, const GeneratorCoefficients& c) {
  j = Json::object();
  for (const auto& [ab, v] : c.quadratic) j[coefficient_key(ab.first, ab.second)] = v.str();
  for (const auto& [a, v] : c.linear) j[generator_name(a)] = v.str();
  if (c.minus_zero) j["-0"] = c.minus_zero->str();
}
inline void from_json(const Json& j, GeneratorCoefficients& c) {
  c = GeneratorCoefficients();
  for (const auto& [k, v] : j.items()) {
    const Rational value = io::parse_rational(v);
    if (k == "-0") {
      c.set_minus_zero(value);
    } else if (const auto comma = k.find(','); comma != std::string::npos) {
      c.set(parse_generator(k.substr(0, comma)), parse_generator(k.substr(comma + 1)), value);
    } else {
      c.set(parse_generator(k), value);
    }
  }
}

inline void to_json(Json& j, const RationalMatrix& m) {
  j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    j.push_back(row);
  }
}
inline void from_json(const Json& j, RationalMatrix& m) {
  const std::size_t rows = j.size(), cols = rows ? j.at(0).size() : 0;
  m = RationalMatrix(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j.at(r).size() != cols) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = io::parse_rational(j.at(r).at(c));
  }
}

inline void to_json(Json& j, const DifferentialForm& f) { j = {{"p4", f.p4}, {"p3", f.p3}, {"p2", f.p2}}; }
inline void from_json(const Json& j, DifferentialForm& f) {
  f.p4 = j.at("p4").get<RationalPoly>();
  f.p3 = j.at("p3").get<RationalPoly>();
  f.p2 = j.at("p2").get<RationalPoly>();
}

inline void to_json(Json& j, const Sl2Operator& op) {
  j = {{"twice_j", op.j.twice_j()}, {"coefficients", op.coefficients}, {"matrix", op.matrix},
       {"p4", op.form.p4},          {"p3", op.form.p3},                 {"p2", op.form.p2}};
}
inline void from_json(const Json& j, Sl2Operator& op) {
  op.j = SpinLabel(j.at("twice_j").get<int>());
  op.coefficients = j.at("coefficients").get<GeneratorCoefficients>();
  op.matrix = j.at("matrix").get<RationalMatrix>();
  op.form = j.get<DifferentialForm>();
}

inline void to_json(Json& j, const AlgebraReport& r) {
  j = {{"twice_j", r.j.twice_j()}, {"commutators_ok", r.commutators_ok}, {"casimir_scalar", r.casimir_scalar},
       {"failures", r.failures}};
}

// --- qes -----------------------------------------------------------------

inline void to_json(Json& j, const CoordinateMap& m) {
  j = {{"n", m.n},         {"p", m.p.str()}, {"exponent", m.exponent.str()}, {"scale", m.scale.str()},
       {"energy_sign", m.energy_sign}};
}
inline void from_json(const Json& j, CoordinateMap& m) {
  m.n = j.at("n").get<int>();
  m.p = io::parse_rational(j.at("p"));
  m.exponent = io::parse_rational(j.at("exponent"));
  m.scale = j.at("scale").get<QuadraticSurd>();
  m.energy_sign = j.at("energy_sign").get<int>();
}

inline void to_json(Json& j, const GaugeData& g) {
  j = {{"A", g.A},   {"a_power", g.a_power}, {"log_coeff", g.log_coeff.str()}, {"deltaV", g.deltaV},
       {"V", g.V}, {"energy_sign", g.energy_sign}};
}
inline void from_json(const Json& j, GaugeData& g) {
  g.A = j.at("A").get<SurdPowerSum>();
  g.a_power = j.at("a_power").get<SurdPowerSum>();
  g.log_coeff = j.at("log_coeff").get<QuadraticSurd>();
  g.deltaV = j.at("deltaV").get<SurdPowerSum>();
  g.V = j.at("V").get<SurdPowerSum>();
  g.energy_sign = j.at("energy_sign").get<int>();
}

inline void to_json(Json& j, const AlgebraicSpectrum& s) {
  Json values = Json::array(), vectors = Json::array();
  for (const auto& z : s.eigenvalues) values.push_back(io::complex_str(z));
  for (const auto& v : s.eigenvectors) {
    Json row = Json::array();
    for (const auto& z : v) row.push_back(io::complex_str(z));
    vectors.push_back(row);
  }
  j = {{"eigenvalues", values}, {"eigenvectors", vectors}, {"residuals", io::nums(s.residuals)}, {"method", s.method}};
}
inline void from_json(const Json& j, AlgebraicSpectrum& s) {
  s = AlgebraicSpectrum();
  for (const auto& z : j.at("eigenvalues")) s.eigenvalues.push_back(io::parse_complex(z.get<std::string>()));
  for (const auto& v : j.at("eigenvectors")) {
    std::vector<Complex> row;
    for (const auto& z : v) row.push_back(io::parse_complex(z.get<std::string>()));
    s.eigenvectors.push_back(row);
  }
  s.residuals = io::parse_nums(j.at("residuals"));
  s.method = j.at("method").get<std::string>();
}

inline void to_json(Json& j, const ExponentCheck& c) {
  j = {{"exponent", c.exponent.str()}, {"target", io::num(c.target)},  {"achieved", io::num(c.achieved)},
       {"residual", io::num(c.residual)}, {"hard", c.hard}, {"depends_on_unknowns", c.depends_on_unknowns}};
}
inline void from_json(const Json& j, ExponentCheck& c) {
  c.exponent = io::parse_rational(j.at("exponent"));
  c.target = io::parse_num(j.at("target"));
  c.achieved = io::parse_num(j.at("achieved"));
  c.residual = io::parse_num(j.at("residual"));
  c.hard = j.at("hard").get<bool>();
  c.depends_on_unknowns = j.at("depends_on_unknowns").get<bool>();
}

inline void to_json(Json& j, const CouplingSolution& s) {
  Json exact = Json::array();
  for (const auto& e : s.exact) exact.push_back(e ? Json(e->str()) : Json(nullptr));
  j = {{"values", io::nums(s.values)}, {"exact", exact},           {"free", s.free},
       {"energy_shift", io::num(s.energy_shift)}, {"checks", s.checks}, {"exact_match", s.exact_match}};
}
inline void from_json(const Json& j, CouplingSolution& s) {
  s.values = io::parse_nums(j.at("values"));
  s.exact.clear();
  for (const auto& e : j.at("exact"))
    s.exact.push_back(e.is_null() ? std::nullopt : std::optional<Rational>(io::parse_rational(e)));
  s.free = j.at("free").get<std::vector<bool>>();
  s.energy_shift = io::parse_num(j.at("energy_shift"));
  s.checks = j.at("checks").get<std::vector<ExponentCheck>>();
  s.exact_match = j.at("exact_match").get<bool>();
}

inline void to_json(Json& j, const MatchResult& m) {
  j = {{"feasible", m.feasible}, {"unknowns", m.unknown_names}, {"solutions", m.solutions},
       {"witness_exponent", m.witness_exponent ? Json(m.witness_exponent->str()) : Json(nullptr)},
       {"reason", m.reason},     {"notes", m.notes}};
}
inline void from_json(const Json& j, MatchResult& m) {
  m.feasible = j.at("feasible").get<bool>();
  m.unknown_names = j.at("unknowns").get<std::vector<std::string>>();
  m.solutions = j.at("solutions").get<std::vector<CouplingSolution>>();
  const auto& w = j.at("witness_exponent");
  m.witness_exponent = w.is_null() ? std::nullopt : std::optional<Rational>(io::parse_rational(w));
  m.reason = j.at("reason").get<std::string>();
  m.notes = j.at("notes").get<std::vector<std::string>>();
}

inline void to_json(Json& j, const Claim& c) {
  j = {{"name", c.name}, {"printed", c.printed}, {"printed_value", c.printed_value}, {"computed", c.computed},
       {"agree", c.agree}, {"note", c.note}};
}
inline void from_json(const Json& j, Claim& c) {
  c.name = j.at("name").get<std::string>();
  c.printed = j.at("printed").get<std::string>();
  c.printed_value = j.at("printed_value").get<std::string>();
  c.computed = j.at("computed").get<std::string>();
  c.agree = j.at("agree").get<bool>();
  c.note = j.at("note").get<std::string>();
}

inline void to_json(Json& j, const CrosscheckReport& r) {
  j = {{"which", claim_set_name(r.which)},
       {"parameters",
        {{"twice_j", r.parameters.j.twice_j()}, {"lambda", r.parameters.lambda.str()}, {"l", r.parameters.l.str()}}},
       {"claims", r.claims},
       {"disagreements", r.disagreements()}};
}
inline void from_json(const Json& j, CrosscheckReport& r) {
  r.which = parse_claim_set(j.at("which").get<std::string>());
  const auto& p = j.at("parameters");
  r.parameters.j = SpinLabel(p.at("twice_j").get<int>());
  r.parameters.lambda = io::parse_rational(p.at("lambda"));
  r.parameters.l = io::parse_rational(p.at("l"));
  r.claims = j.at("claims").get<std::vector<Claim>>();
}

// --- duality -------------------------------------------------------------

inline void to_json(Json& j, const ExponentPair& p) { j = {{"alpha", p.alpha.str()}, {"alpha_bar", p.alpha_bar.str()}}; }
inline void from_json(const Json& j, ExponentPair& p) {
  p.alpha = io::parse_rational(j.at("alpha"));
  p.alpha_bar = io::parse_rational(j.at("alpha_bar"));
}

inline void to_json(Json& j, const RadialParameters& p) {
  j = {{"lambda", p.lambda.str()}, {"l", p.l.str()}, {"energy", p.energy ? Json(p.energy->str()) : Json(nullptr)}};
}
inline void from_json(const Json& j, RadialParameters& p) {
  p.lambda = io::parse_rational(j.at("lambda"));
  p.l = io::parse_rational(j.at("l"));
  const auto& e = j.at("energy");
  p.energy = e.is_null() ? std::nullopt : std::optional<Rational>(io::parse_rational(e));
}

inline void to_json(Json& j, const ClassificationRow& r) {
  j = {{"alpha", r.alpha.str()},
       {"alpha_bar", r.alpha_bar ? Json(r.alpha_bar->str()) : Json(nullptr)},
       {"integer_partner", r.integer_partner},
       {"admissible", r.admissibility.admissible},
       {"reason", r.admissibility.reason},
       {"pair_admissible", r.pair_admissible},
       {"annotation", r.annotation}};
}
inline void from_json(const Json& j, ClassificationRow& r) {
  r.alpha = io::parse_rational(j.at("alpha"));
  const auto& b = j.at("alpha_bar");
  r.alpha_bar = b.is_null() ? std::nullopt : std::optional<Rational>(io::parse_rational(b));
  r.integer_partner = j.at("integer_partner").get<bool>();
  r.admissibility = {j.at("admissible").get<bool>(), j.at("reason").get<std::string>()};
  r.pair_admissible = j.at("pair_admissible").get<bool>();
  r.annotation = j.at("annotation").get<std::string>();
}

inline void to_json(Json& j, const ProportionalityReport& r) {
  j = {{"alpha", r.pair.alpha.str()},
       {"alpha_bar", r.pair.alpha_bar.str()},
       {"residual", io::num(r.residual)},
       {"grid",
        {{"r_min", io::num(r.grid.r_min)}, {"r_max", io::num(r.grid.r_max)}, {"step", io::num(r.grid.step)},
         {"points", r.points}}},
       {"absolute_residual", io::num(r.absolute_residual)},
       {"truncation_estimate", io::num(r.truncation_estimate)},
       {"scale", io::num(r.scale)},
       {"gauge", gauge_exponent_name(r.gauge)},
       {"params", r.params},
       {"dual", r.dual},
       {"passed", r.passed}};
}
inline void from_json(const Json& j, ProportionalityReport& r) {
  r.pair = {io::parse_rational(j.at("alpha")), io::parse_rational(j.at("alpha_bar"))};
  r.residual = io::parse_num(j.at("residual"));
  const auto& g = j.at("grid");
  r.grid = {io::parse_num(g.at("r_min")), io::parse_num(g.at("r_max")), io::parse_num(g.at("step"))};
  r.points = g.at("points").get<std::size_t>();
  r.absolute_residual = io::parse_num(j.at("absolute_residual"));
  r.truncation_estimate = io::parse_num(j.at("truncation_estimate"));
  r.scale = io::parse_num(j.at("scale"));
  r.gauge = j.at("gauge").get<std::string>() == "derived" ? GaugeExponent::derived : GaugeExponent::negated;
  r.params = j.at("params").get<RadialParameters>();
  r.dual = j.at("dual").get<RadialParameters>();
  r.passed = j.at("passed").get<bool>();
}

// --- radial --------------------------------------------------------------

inline void to_json(Json& j, const RadialGrid& g) {
  j = {{"r_min", io::num(g.r_min)}, {"r_max", io::num(g.r_max)}, {"intervals", g.intervals}};
}
inline void from_json(const Json& j, RadialGrid& g) {
  g.r_min = io::parse_num(j.at("r_min"));
  g.r_max = io::parse_num(j.at("r_max"));
  g.intervals = j.at("intervals").get<std::size_t>();
}

inline void to_json(Json& j, const SpectrumResult& s) {
  j = {{"eigenvalues", io::nums(s.eigenvalues)}, {"error_estimates", io::nums(s.error_estimates)},
       {"coarse", io::nums(s.coarse)},           {"fine", io::nums(s.fine)},
       {"grid", s.grid_used}};
}
inline void from_json(const Json& j, SpectrumResult& s) {
  s.eigenvalues = io::parse_nums(j.at("eigenvalues"));
  s.error_estimates = io::parse_nums(j.at("error_estimates"));
  s.coarse = io::parse_nums(j.at("coarse"));
  s.fine = io::parse_nums(j.at("fine"));
  s.grid_used = j.at("grid").get<RadialGrid>();
}

inline void to_json(Json& j, const DualityLevel& d) {
  j = {{"level", d.level},
       {"coulomb_energy", io::num(d.coulomb_energy)},
       {"coulomb_error", io::num(d.coulomb_error)},
       {"oscillator_lambda", io::num(d.oscillator_lambda)},
       {"oscillator_l", d.oscillator_l.str()},
       {"expected", io::num(d.expected)},
       {"closest", io::num(d.closest)},
       {"oscillator_index", d.oscillator_index},
       {"residual", io::num(d.residual)},
       {"combined_error", io::num(d.combined_error)},
       {"passed", d.passed}};
}
inline void from_json(const Json& j, DualityLevel& d) {
  d.level = j.at("level").get<std::size_t>();
  d.coulomb_energy = io::parse_num(j.at("coulomb_energy"));
  d.coulomb_error = io::parse_num(j.at("coulomb_error"));
  d.oscillator_lambda = io::parse_num(j.at("oscillator_lambda"));
  d.oscillator_l = io::parse_rational(j.at("oscillator_l"));
  d.expected = io::parse_num(j.at("expected"));
  d.closest = io::parse_num(j.at("closest"));
  d.oscillator_index = j.at("oscillator_index").get<std::size_t>();
  d.residual = io::parse_num(j.at("residual"));
  d.combined_error = io::parse_num(j.at("combined_error"));
  d.passed = j.at("passed").get<bool>();
}

inline void to_json(Json& j, const DualityReport& r) {
  j = {{"lambda", io::num(r.lambda)}, {"l", r.l.str()}, {"tolerance", io::num(r.tolerance)},
       {"levels", r.levels},          {"passed", r.passed()}};
}
inline void from_json(const Json& j, DualityReport& r) {
  r.lambda = io::parse_num(j.at("lambda"));
  r.l = io::parse_rational(j.at("l"));
  r.tolerance = io::parse_num(j.at("tolerance"));
  r.levels = j.at("levels").get<std::vector<DualityLevel>>();
}

inline void to_json(Json& j, const CouplingScan& s) {
  j = {{"energy", io::num(s.energy)}, {"l", s.l.str()}, {"lambdas", io::nums(s.lambdas)},
       {"errors", io::nums(s.errors)}, {"oscillator", s.oscillator}};
}
inline void from_json(const Json& j, CouplingScan& s) {
  s.energy = io::parse_num(j.at("energy"));
  s.l = io::parse_rational(j.at("l"));
  s.lambdas = io::parse_nums(j.at("lambdas"));
  s.errors = io::parse_nums(j.at("errors"));
  s.oscillator = j.at("oscillator").get<SpectrumResult>();
}

/// level,E,error with 1-based levels.
inline std::string to_csv(const SpectrumResult& s) {
  std::ostringstream os;
  os << "level,E,error\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    os << i + 1 << "," << io::num(s.eigenvalues[i]) << "," << io::num(s.error_estimates[i]) << "\n";
  return os.str();
}

}  // namespace qeslab
