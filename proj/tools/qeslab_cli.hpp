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

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qeslab/qeslab.hpp"

namespace qeslab::cli {

enum ExitCode { kOk = 0, kValidation = 2, kScientific = 3 };

namespace detail {

inline std::string g6(double v) { return format_double(v, 6); }

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      os << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline void set_coefficient(GeneratorCoefficients& coeffs, const std::string& key, const Rational& value) {
  if (key == "-0") {
    coeffs.set_minus_zero(value);
  } else if (const auto comma = key.find(','); comma != std::string::npos) {
    coeffs.set(parse_generator(key.substr(0, comma)), parse_generator(key.substr(comma + 1)), value);
  } else {
    coeffs.set(parse_generator(key), value);
  }
}

/// "a,b=VALUE", "a=VALUE" or "-0=VALUE".
inline void parse_coefficient(GeneratorCoefficients& coeffs, const std::string& text) {
  const auto eq = text.rfind('=');
  if (eq == std::string::npos || eq == 0) throw ParseError("--coeff expects KEY=VALUE, got '" + text + "'");
  set_coefficient(coeffs, text.substr(0, eq), Rational::parse(text.substr(eq + 1)));
}

inline CouplingSlot parse_slot(const std::string& key) {
  if (key == "-0") return CouplingSlot::minus_zero();
  if (const auto comma = key.find(','); comma != std::string::npos)
    return CouplingSlot::quadratic(parse_generator(key.substr(0, comma)), parse_generator(key.substr(comma + 1)));
  return CouplingSlot::linear(parse_generator(key));
}

inline Branch parse_branch(const std::string& s) {
  if (s == "auto" || s == "automatic") return Branch::automatic;
  if (s == "positive") return Branch::positive;
  if (s == "negated") return Branch::negated;
  throw ParseError("unknown branch '" + s + "'");
}

inline std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw ParseError("--range expects LO..HI");
  try {
    std::size_t a = 0, b = 0;
    const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
    const long l = std::stol(lo, &a), h = std::stol(hi, &b);
    if (a != lo.size() || b != hi.size()) throw ParseError("--range expects integers");
    if (l > h) throw ParseError("--range is empty");
    if (h - l > 10000) throw ParseError("--range is too wide");
    return {l, h};
  } catch (const std::logic_error&) {
    throw ParseError("--range expects integers, got '" + s + "'");
  }
}

struct Output {
  std::string format = "table";
  std::string path;
};

inline void add_output_flags(CLI::App* app, Output& o, std::vector<std::string> formats) {
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
  app->add_option("--out", o.path, "write output to a file instead of stdout");
}

inline void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path);
  if (!f) throw DomainError("cannot open '" + o.path + "' for writing");
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- classify ------------------------------------------------------------

inline std::string classify_command(const std::string& range, bool integer_only, const Output& o) {
  const auto [lo, hi] = parse_range(range);
  auto rows = classify_exponents(lo, hi);
  if (integer_only)
    std::erase_if(rows, [](const ClassificationRow& r) { return !r.integer_partner; });
  std::ostringstream os;
  if (o.format == "json") {
    Json j = {{"range", {lo, hi}}, {"rows", rows}, {"integer_duals", enumerate_integer_duals()}};
    return dump(j);
  }
  if (o.format == "csv") {
    os << "alpha,alpha_bar,integer_partner,admissible,pair_admissible,annotation\n";
    for (const auto& r : rows)
      os << r.alpha << "," << (r.alpha_bar ? r.alpha_bar->str() : "") << "," << r.integer_partner << ","
         << r.admissibility.admissible << "," << r.pair_admissible << "," << csv_quote(r.annotation) << "\n";
    return os.str();
  }
  Table t({"alpha", "alpha_bar", "integer_dual", "sl2_admissible", "pair_admissible", "note"});
  for (const auto& r : rows)
    t.add({r.alpha.str(), r.alpha_bar ? r.alpha_bar->str() : "-", r.integer_partner ? "yes" : "no",
           r.admissibility.admissible ? "yes" : "no (" + r.admissibility.reason + ")",
           r.pair_admissible ? "yes" : "no", r.annotation});
  t.print(os);
  return os.str();
}

// --- spectrum ------------------------------------------------------------

struct SpectrumArgs {
  std::optional<int> twice_j;
  std::vector<std::string> coeffs;
  std::string preset;
  std::string branch = "auto";
  std::vector<std::string> unknowns;
  std::vector<std::string> targets;
  std::string lambda;
  std::string l = "0";
  bool impose_extra = true;
  std::vector<double> samples;
  Output out;
};

inline std::string spectrum_match(const SpectrumArgs& a, const CouplingFamily& family, const RationalPowerSum& target,
                                  const MatchOptions& options, bool& infeasible) {
  const MatchResult m = match_couplings(target, family, options);
  infeasible = !m.feasible;
  std::ostringstream os;
  if (a.out.format == "json") {
    Json j = {{"twice_j", family.j.twice_j()}, {"target", target}, {"fixed", family.fixed}, {"match", m}};
    return dump(j);
  }
  if (a.out.format == "csv") {
    os << "solution,unknown,value,exact,free\n";
    for (std::size_t s = 0; s < m.solutions.size(); ++s)
      for (std::size_t i = 0; i < m.unknown_names.size(); ++i)
        os << s + 1 << "," << csv_quote(m.unknown_names[i]) << "," << io::num(m.solutions[s].values[i]) << ","
           << (m.solutions[s].exact[i] ? m.solutions[s].exact[i]->str() : "") << "," << m.solutions[s].free[i] << "\n";
    return os.str();
  }
  os << "target V(x) = " << target.str() << "  (2j = " << family.j.twice_j() << ")\n";
  for (const auto& n : m.notes) os << "note: " << n << "\n";
  if (!m.feasible) {
    os << "infeasible: witness exponent " << (m.witness_exponent ? m.witness_exponent->str() : "?") << "\n"
       << "  " << m.reason << "\n";
    return os.str();
  }
  for (std::size_t s = 0; s < m.solutions.size(); ++s) {
    const auto& sol = m.solutions[s];
    os << "solution " << s + 1 << (sol.exact_match ? " (exact)" : "") << "\n";
    for (std::size_t i = 0; i < m.unknown_names.size(); ++i)
      os << "  " << m.unknown_names[i] << " = " << (sol.exact[i] ? sol.exact[i]->str() : g6(sol.values[i]))
         << (sol.free[i] ? "  (free)" : "") << "\n";
    os << "  energy shift = " << g6(sol.energy_shift) << "\n";
    Table t({"  exponent", "target", "achieved", "residual", "kind"});
    for (const auto& c : sol.checks)
      t.add({"  " + c.exponent.str(), g6(c.target), g6(c.achieved), g6(c.residual),
             c.hard ? "matched" : "unremovable"});
    t.print(os);
  }
  return os.str();
}

inline std::string spectrum_command(const SpectrumArgs& a, bool& infeasible) {
  infeasible = false;
  const int twice_j = a.twice_j.value_or(2);
  const SpinLabel j(twice_j);
  const Branch branch = parse_branch(a.branch);
  GeneratorCoefficients coeffs;
  for (const auto& c : a.coeffs) parse_coefficient(coeffs, c);

  // matching presets and explicit unknowns
  if (a.preset == "coulomb-family" || a.preset == "oscillator-family" || !a.unknowns.empty()) {
    CouplingFamily family{j, coeffs, {}};
    RationalPowerSum target;
    MatchOptions options;
    options.branch = branch;
    options.impose_extra_terms = a.impose_extra;
    const Rational l = Rational::parse(a.l);
    if (a.preset == "coulomb-family") {
      family = coulomb_family(j);
      family.fixed = coeffs;
      target.add_term(Rational(-1), a.lambda.empty() ? Rational(-1) : Rational::parse(a.lambda));
      target.add_term(Rational(-2), l * (l + Rational(1)) / Rational(2));
    } else if (a.preset == "oscillator-family") {
      family = oscillator_family(j);
      family.fixed = coeffs;
      options.impose_extra_terms = false;
      target.add_term(Rational(2), a.lambda.empty() ? Rational(1, 2) : Rational::parse(a.lambda));
      target.add_term(Rational(-2), l * (l + Rational(1)) / Rational(2));
    }
    for (const auto& u : a.unknowns) family.unknowns.push_back(parse_slot(u));
    for (const auto& t : a.targets) {
      const auto eq = t.rfind('=');
      if (eq == std::string::npos || eq == 0) throw ParseError("--target expects EXPONENT=VALUE");
      target.add_term(Rational::parse(t.substr(0, eq)), Rational::parse(t.substr(eq + 1)));
    }
    if (family.unknowns.empty()) throw ParseError("matching needs at least one --unknown");
    return spectrum_match(a, family, target, options, infeasible);
  }

  if (a.preset == "paper-j1-oscillator") {
    coeffs.set_minus_zero(Rational(1));
    coeffs.set(Generator::plus, Rational(1));
  } else if (!a.preset.empty()) {
    throw ParseError("unknown preset '" + a.preset + "'");
  }
  if (coeffs.empty()) throw ParseError("spectrum needs --coeff or --preset");
  const Sl2Operator op = assemble(coeffs, j);
  const AlgebraicSpectrum spec = algebraic_spectrum(op);

  std::optional<CoordinateMap> map;
  std::optional<GaugeData> gauge;
  std::string gauge_note;
  Branch used = branch;
  if (a.preset == "paper-j1-oscillator" && branch == Branch::automatic) used = Branch::negated;
  try {
    map = coordinate_map(op.form, used);
    gauge = gauge_data(op.form, *map);
  } catch (const Error& e) {
    gauge_note = e.what();
  }
  // wavefunction samples for real eigenvectors
  std::vector<std::vector<double>> psi;
  std::string psi_note;
  if (!a.samples.empty()) {
    if (!gauge) throw DomainError("--sample needs a coordinate map: " + gauge_note);
    for (const auto& v : spec.eigenvectors) {
      std::vector<double> ansatz;
      for (const auto& z : v) ansatz.push_back(z.real());
      psi.push_back(reconstruct_wavefunction(ansatz, *map, *gauge, a.samples));
    }
  }

  std::ostringstream os;
  if (a.out.format == "json") {
    Json values = Json::array();
    for (const auto& z : spec.eigenvalues) values.push_back(io::complex_str(z));
    Json j = {{"eigenvalues", values}, {"operator", op}, {"spectrum", spec}};
    if (map) j["map"] = *map;
    if (gauge) j["gauge"] = *gauge;
    if (!gauge_note.empty()) j["gauge_note"] = gauge_note;
    if (!psi.empty()) {
      j["samples"] = io::nums(a.samples);
      Json waves = Json::array();
      for (const auto& p : psi) waves.push_back(io::nums(p));
      j["wavefunctions"] = waves;
      j["precision_bits"] = real_precision_bits();
    }
    return dump(j);
  }
  if (a.out.format == "csv") {
    os << "level,E_re,E_im,residual\n";
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
      os << i + 1 << "," << io::num(spec.eigenvalues[i].real()) << "," << io::num(spec.eigenvalues[i].imag()) << ","
         << io::num(spec.residuals[i]) << "\n";
    return os.str();
  }
  os << "2j = " << twice_j << "\n"
     << "P4(xi) = " << op.form.p4.str() << "\n"
     << "P3(xi) = " << op.form.p3.str() << "\n"
     << "P2(xi) = " << op.form.p2.str() << "\n";
  Table t({"level", "E", "residual", "ansatz (1, alpha, beta, ...)"});
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    std::string vec;
    for (const auto& z : spec.eigenvectors[i]) vec += (vec.empty() ? "" : ", ") + (z.imag() == 0.0 ? g6(z.real()) : io::complex_str(z));
    const auto& z = spec.eigenvalues[i];
    t.add({std::to_string(i + 1), z.imag() == 0.0 ? g6(z.real()) : io::complex_str(z), g6(spec.residuals[i]), vec});
  }
  t.print(os);
  if (gauge) {
    os << "x = " << map->scale.str() << " * xi^(" << map->exponent.str() << ")"
       << (map->energy_sign < 0 ? "  (negated branch: physical E = -E)" : "") << "\n"
       << "A(x) = " << gauge->A.str() << "\n"
       << "V(x) = " << gauge->V.str() << "\n";
  } else {
    os << "gauge: unavailable (" << gauge_note << ")\n";
  }
  for (std::size_t k = 0; k < psi.size(); ++k) {
    os << "psi_" << k + 1 << ":";
    for (std::size_t i = 0; i < a.samples.size(); ++i) os << " " << g6(a.samples[i]) << "->" << g6(psi[k][i]);
    os << "\n";
  }
  return os.str();
}

// --- dualize ---------------------------------------------------------------

inline std::string dualize_command(const std::string& alpha_s, const std::string& lambda_s, const std::string& l_s,
                                   const std::string& energy_s, bool inverse, const Output& o) {
  const Rational alpha = Rational::parse(alpha_s);
  const ExponentPair pair = exponent_pair(alpha);
  std::optional<RadialParameters> mapped, input;
  if (!lambda_s.empty() || !energy_s.empty()) {
    if (energy_s.empty()) throw MissingEnergy("dualize: --energy is required to map parameters");
    input = RadialParameters{lambda_s.empty() ? Rational(0) : Rational::parse(lambda_s), Rational::parse(l_s),
                             Rational::parse(energy_s)};
    mapped = dual_parameters(*input, pair, inverse ? Direction::inverse : Direction::forward);
  }
  std::ostringstream os;
  if (o.format == "json") {
    Json j = {{"pair", pair}, {"admissible", sl2_admissible(alpha).admissible},
              {"partner_admissible", sl2_admissible(pair.alpha_bar).admissible}};
    if (input) {
      j["input"] = *input;
      j["dual"] = *mapped;
      j["direction"] = inverse ? "inverse" : "forward";
    }
    return dump(j);
  }
  if (o.format == "csv") {
    os << "key,value\nalpha," << pair.alpha << "\nalpha_bar," << pair.alpha_bar << "\n";
    if (mapped)
      os << "lambda_bar," << mapped->lambda << "\nenergy_bar," << mapped->energy->str() << "\nl_bar," << mapped->l
         << "\n";
    return os.str();
  }
  os << "alpha = " << pair.alpha << "  ->  alpha_bar = " << pair.alpha_bar << "\n";
  if (mapped) {
    const char* bar = inverse ? "" : "_bar";
    os << "lambda" << bar << " = " << mapped->lambda << "\n"
       << "E" << bar << " = " << mapped->energy->str() << "\n"
       << "l" << bar << " = " << mapped->l << "\n";
  }
  return os.str();
}

// --- solve -------------------------------------------------------------------

struct GridArgs {
  std::optional<double> r_min, r_max;
  std::optional<std::size_t> points;
};

inline RadialGrid make_grid(const Rational& alpha, const GridArgs& g) {
  RadialGrid grid = default_grid(alpha);
  if (g.r_min) grid.r_min = *g.r_min;
  if (g.r_max) grid.r_max = *g.r_max;
  if (g.points) grid.intervals = *g.points;
  return grid;
}

inline std::string solve_command(const std::string& alpha_s, const std::string& lambda_s, const std::string& l_s,
                                 const GridArgs& g, std::size_t levels, const Output& o) {
  const Rational alpha = Rational::parse(alpha_s);
  RadialProblem p{alpha, Rational::parse(lambda_s).to_double(), Rational::parse(l_s), make_grid(alpha, g)};
  const SpectrumResult s = solve_radial(p, levels);
  if (o.format == "json") return dump(Json{{"alpha", alpha.str()}, {"lambda", io::num(p.lambda)}, {"l", p.l.str()}, {"result", s}});
  if (o.format == "csv") return to_csv(s);
  std::ostringstream os;
  os << "alpha = " << alpha << ", lambda = " << g6(p.lambda) << ", l = " << p.l << ", grid [" << g6(p.grid.r_min)
     << ", " << g6(p.grid.r_max) << "] with " << p.grid.intervals << " intervals\n";
  Table t({"level", "E", "error"});
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    t.add({std::to_string(i + 1), g6(s.eigenvalues[i]), g6(s.error_estimates[i])});
  t.print(os);
  return os.str();
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string mode = "duality";
  std::string lambda = "-1";
  std::string l = "0";
  std::size_t levels = 2;
  std::string alpha = "-1";
  std::string energy;
  std::string l_bar;
  std::string gauge = "derived";
  double r_min = 0.5, r_max = 5.0, step = 1e-3;
  double tolerance = -1.0;
  GridArgs grid;
  std::size_t count = 3;
  Output out;
};

inline std::string verify_command(const VerifyArgs& a, bool& failed) {
  failed = false;
  std::ostringstream os;
  if (a.mode == "duality") {
    RadialProblem c{Rational(-1), Rational::parse(a.lambda).to_double(), Rational::parse(a.l),
                    make_grid(Rational(-1), a.grid)};
    DualityOptions opt;
    if (a.tolerance > 0) opt.tolerance = a.tolerance;
    const DualityReport r = verify_duality(c, a.levels, opt);
    failed = !r.passed();
    if (a.out.format == "json") return dump(Json(r));
    if (a.out.format == "csv") {
      os << "level,coulomb_E,oscillator_lambda,expected,closest,residual,combined_error,passed\n";
      for (const auto& d : r.levels)
        os << d.level << "," << io::num(d.coulomb_energy) << "," << io::num(d.oscillator_lambda) << ","
           << io::num(d.expected) << "," << io::num(d.closest) << "," << io::num(d.residual) << ","
           << io::num(d.combined_error) << "," << d.passed << "\n";
      return os.str();
    }
    os << "Coulomb lambda = " << g6(r.lambda) << ", l = " << r.l << "; oscillator l_bar = "
       << (Rational(2) * r.l + Rational(1, 2)) << ", tolerance " << g6(r.tolerance) << "\n";
    Table t({"level", "E_n", "lambda_bar", "expected E_bar", "closest", "residual", "error", "status"});
    for (const auto& d : r.levels)
      t.add({std::to_string(d.level), g6(d.coulomb_energy), g6(d.oscillator_lambda), g6(d.expected), g6(d.closest),
             g6(d.residual), g6(d.combined_error), d.passed ? "ok" : "FAIL"});
    t.print(os);
    return os.str();
  }
  if (a.mode == "proportionality") {
    const Rational alpha = Rational::parse(a.alpha);
    RadialParameters params{Rational::parse(a.lambda), Rational::parse(a.l),
                            a.energy.empty() ? std::optional<Rational>(Rational(-1, 2))
                                             : std::optional<Rational>(Rational::parse(a.energy))};
    ProportionalityOptions opt;
    if (a.tolerance > 0) opt.tolerance = a.tolerance;
    if (a.gauge == "negated")
      opt.gauge = GaugeExponent::negated;
    else if (a.gauge != "derived")
      throw ParseError("--gauge must be derived or negated");
    const auto test_fn = [](double r) { return r * r * std::exp(-r * r); };
    const ProportionalityReport r = operator_proportionality_check(
        alpha, params, test_fn, {a.r_min, a.r_max, a.step}, opt,
        a.l_bar.empty() ? std::nullopt : std::optional<Rational>(Rational::parse(a.l_bar)));
    failed = !r.passed;
    if (a.out.format == "json") return dump(Json(r));
    if (a.out.format == "csv")
      return "alpha,alpha_bar,residual,truncation_estimate,passed\n" + r.pair.alpha.str() + "," +
             r.pair.alpha_bar.str() + "," + io::num(r.residual) + "," + io::num(r.truncation_estimate) + "," +
             (r.passed ? "1" : "0") + "\n";
    os << "alpha = " << r.pair.alpha << ", alpha_bar = " << r.pair.alpha_bar << ", gauge " << gauge_exponent_name(r.gauge)
       << "\n"
       << "dual: lambda_bar = " << r.dual.lambda << ", E_bar = " << r.dual.energy->str() << ", l_bar = " << r.dual.l << "\n"
       << "test function rb^2 exp(-rb^2) on [" << g6(r.grid.r_min) << ", " << g6(r.grid.r_max) << "], step "
       << g6(r.grid.step) << " (" << r.points << " points)\n"
       << "relative residual = " << g6(r.residual) << ", truncation estimate = " << g6(r.truncation_estimate) << "\n"
       << (r.passed ? "ok" : "FAIL") << "\n";
    return os.str();
  }
  if (a.mode == "couplings") {
    const double energy = a.energy.empty() ? -0.5 : Rational::parse(a.energy).to_double();
    const RadialGrid grid = make_grid(Rational(2), a.grid);
    const CouplingScan s = coulomb_couplings_from_oscillator(energy, Rational::parse(a.l), a.count, grid);
    if (a.out.format == "json") return dump(Json(s));
    if (a.out.format == "csv") {
      os << "level,lambda,error\n";
      for (std::size_t i = 0; i < s.lambdas.size(); ++i)
        os << i + 1 << "," << io::num(s.lambdas[i]) << "," << io::num(s.errors[i]) << "\n";
      return os.str();
    }
    os << "Coulomb couplings with E = " << g6(s.energy) << " in their spectrum (l = " << s.l << ")\n";
    Table t({"level", "lambda", "error"});
    for (std::size_t i = 0; i < s.lambdas.size(); ++i) t.add({std::to_string(i + 1), g6(s.lambdas[i]), g6(s.errors[i])});
    t.print(os);
    return os.str();
  }
  throw ParseError("unknown verify mode '" + a.mode + "'");
}

// --- crosscheck ------------------------------------------------------------------

inline std::string crosscheck_command(const std::string& which, std::optional<int> twice_j, const std::string& lambda,
                                      const std::string& l, const Output& o) {
  std::vector<ClaimSet> sets;
  if (which == "all")
    sets = {ClaimSet::coulomb_polynomials, ClaimSet::oscillator_p4, ClaimSet::coulomb_constants,
            ClaimSet::oscillator_constants};
  else
    sets = {parse_claim_set(which)};
  std::vector<CrosscheckReport> reports;
  for (ClaimSet s : sets) {
    CrosscheckParameters p;
    if (twice_j) p.j = SpinLabel(*twice_j);
    const bool oscillator = s == ClaimSet::oscillator_constants;
    p.lambda = lambda.empty() ? (oscillator ? Rational(2) : Rational(1)) : Rational::parse(lambda);
    p.l = l.empty() ? (oscillator ? Rational(1, 2) : Rational(0)) : Rational::parse(l);
    reports.push_back(paper_claim_crosscheck(s, p));
  }
  std::ostringstream os;
  if (o.format == "json") return dump(Json{{"reports", reports}});
  if (o.format == "csv") {
    os << "set,claim,agree,printed,printed_value,computed,note\n";
    for (const auto& r : reports)
      for (const auto& c : r.claims)
        os << claim_set_name(r.which) << "," << csv_quote(c.name) << "," << c.agree << "," << csv_quote(c.printed)
           << "," << csv_quote(c.printed_value) << "," << csv_quote(c.computed) << "," << csv_quote(c.note) << "\n";
    return os.str();
  }
  for (const auto& r : reports) {
    os << "== " << claim_set_name(r.which) << " (2j = " << r.parameters.j.twice_j() << ", lambda = " << r.parameters.lambda
       << ", l = " << r.parameters.l << "): " << r.disagreements() << " disagreement(s)\n";
    for (const auto& c : r.claims) {
      os << "  [" << (c.agree ? "agree" : "DISAGREE") << "] " << c.name << "\n"
         << "    printed : " << c.printed << "  =>  " << c.printed_value << "\n"
         << "    computed: " << c.computed << "\n";
      if (!c.note.empty()) os << "    note    : " << c.note << "\n";
    }
  }
  return os.str();
}

}  // namespace detail

/// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"qeslab: sl(2) quasi-exactly solvable Hamiltonians and dual power-law potentials", "qeslab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qeslab 0.1.0");

  // classify
  std::string range = "-8..4";
  bool integer_only = false;
  Output classify_out;
  auto* classify = app.add_subcommand("classify", "tabulate power-law exponents and their partners");
  classify->add_option("--range", range, "integer range LO..HI")->capture_default_str();
  classify->add_flag("--integer-only", integer_only, "only rows with an integer partner");
  add_output_flags(classify, classify_out, {"table", "json", "csv"});

  // spectrum
  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "assemble an sl(2) Hamiltonian and compute its algebraic sector");
  spectrum->add_option("--twice-j", sa.twice_j, "2j, the sector has dimension 2j+1")->check(CLI::Range(0, 64));
  spectrum->add_option("--coeff", sa.coeffs, "coupling KEY=VALUE; keys a,b (T^aT^b), a (T^a), -0 (T^-0)");
  spectrum->add_option("--preset", sa.preset, "paper-j1-oscillator | coulomb-family | oscillator-family")
      ->check(CLI::IsMember({"paper-j1-oscillator", "coulomb-family", "oscillator-family"}));
  spectrum->add_option("--branch", sa.branch, "auto | positive | negated")->capture_default_str();
  spectrum->add_option("--unknown", sa.unknowns, "coupling key to solve for (matching mode)");
  spectrum->add_option("--target", sa.targets, "target potential term EXPONENT=VALUE (matching mode)");
  spectrum->add_option("--lambda", sa.lambda, "coupling of the family presets");
  spectrum->add_option("--l", sa.l, "angular momentum of the family presets")->capture_default_str();
  spectrum->add_option("--impose-extra", sa.impose_extra, "require extra family terms to vanish")->capture_default_str();
  spectrum->add_option("--sample", sa.samples, "x at which to evaluate the wavefunctions");
  add_output_flags(spectrum, sa.out, {"table", "json", "csv"});

  // dualize
  std::string d_alpha, d_lambda, d_l = "0", d_energy;
  bool d_inverse = false;
  Output dualize_out;
  auto* dualize = app.add_subcommand("dualize", "partner exponent and mapped radial parameters");
  dualize->add_option("--alpha", d_alpha, "exponent alpha")->required();
  dualize->add_option("--lambda", d_lambda, "coupling");
  dualize->add_option("--l", d_l, "angular momentum")->capture_default_str();
  dualize->add_option("--energy", d_energy, "energy of the level to map");
  dualize->add_flag("--inverse", d_inverse, "map barred parameters back");
  add_output_flags(dualize, dualize_out, {"table", "json", "csv"});

  // solve
  std::string s_alpha, s_lambda, s_l = "0";
  GridArgs s_grid;
  std::size_t s_levels = 3;
  Output solve_out;
  auto* solve = app.add_subcommand("solve", "finite-difference radial eigenvalues");
  solve->add_option("--alpha", s_alpha, "exponent alpha")->required();
  solve->add_option("--lambda", s_lambda, "coupling of lambda r^alpha")->required();
  solve->add_option("--l", s_l, "angular momentum")->capture_default_str();
  solve->add_option("--r-min", s_grid.r_min, "inner wall");
  solve->add_option("--r-max", s_grid.r_max, "outer wall");
  solve->add_option("--points", s_grid.points, "grid intervals N (the check grid uses 2N)");
  solve->add_option("--levels", s_levels, "number of levels")->check(CLI::Range(0, 20))->capture_default_str();
  add_output_flags(solve, solve_out, {"table", "json", "csv"});

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "numerical and operator-level duality checks");
  verify->add_option("--mode", va.mode, "duality | proportionality | couplings")
      ->check(CLI::IsMember({"duality", "proportionality", "couplings"}))
      ->capture_default_str();
  verify->add_option("--coulomb-lambda,--lambda", va.lambda, "Coulomb coupling (lambda < 0 attracts)")
      ->capture_default_str();
  verify->add_option("--l", va.l, "angular momentum")->capture_default_str();
  verify->add_option("--levels", va.levels, "Coulomb levels to check")->check(CLI::Range(0, 20))->capture_default_str();
  verify->add_option("--alpha", va.alpha, "exponent (proportionality)")->capture_default_str();
  verify->add_option("--energy", va.energy, "energy (proportionality) or target energy (couplings)");
  verify->add_option("--l-bar", va.l_bar, "partner angular momentum (proportionality)");
  verify->add_option("--gauge", va.gauge, "derived | negated gauge exponent")->capture_default_str();
  verify->add_option("--rb-min", va.r_min, "proportionality grid start")->capture_default_str();
  verify->add_option("--rb-max", va.r_max, "proportionality grid end")->capture_default_str();
  verify->add_option("--step", va.step, "proportionality grid step")->capture_default_str();
  verify->add_option("--tolerance", va.tolerance, "pass threshold");
  verify->add_option("--r-min", va.grid.r_min, "radial inner wall");
  verify->add_option("--r-max", va.grid.r_max, "radial outer wall");
  verify->add_option("--points", va.grid.points, "radial grid intervals");
  verify->add_option("--count", va.count, "couplings to return")->check(CLI::Range(0, 20))->capture_default_str();
  add_output_flags(verify, va.out, {"table", "json", "csv"});

  // crosscheck
  std::string c_which = "all", c_lambda, c_l;
  std::optional<int> c_twice_j;
  Output crosscheck_out;
  auto* crosscheck = app.add_subcommand("crosscheck", "compare printed closed forms with derived values");
  crosscheck->add_option("--which", c_which, "all | coulomb_constants | oscillator_constants | oscillator_p4 | coulomb_polynomials")
      ->capture_default_str();
  crosscheck->add_option("--twice-j", c_twice_j, "2j")->check(CLI::Range(0, 64));
  crosscheck->add_option("--lambda", c_lambda, "coupling (barred for the oscillator set)");
  crosscheck->add_option("--l", c_l, "angular momentum (barred for the oscillator set)");
  add_output_flags(crosscheck, crosscheck_out, {"table", "json", "csv"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }

  try {
    bool flagged = false;
    std::string text;
    const Output* o = nullptr;
    if (*classify) {
      text = classify_command(range, integer_only, classify_out);
      o = &classify_out;
    } else if (*spectrum) {
      text = spectrum_command(sa, flagged);
      o = &sa.out;
    } else if (*dualize) {
      text = dualize_command(d_alpha, d_lambda, d_l, d_energy, d_inverse, dualize_out);
      o = &dualize_out;
    } else if (*solve) {
      text = solve_command(s_alpha, s_lambda, s_l, s_grid, s_levels, solve_out);
      o = &solve_out;
    } else if (*verify) {
      text = verify_command(va, flagged);
      o = &va.out;
    } else if (*crosscheck) {
      text = crosscheck_command(c_which, c_twice_j, c_lambda, c_l, crosscheck_out);
      o = &crosscheck_out;
    }
    emit(*o, text, out);
    return flagged ? kScientific : kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const GridError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const SingularExponent& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const MissingEnergy& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const DegreeOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "infeasible: " << e.what() << "\n";
    return kScientific;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

}  // namespace qeslab::cli
