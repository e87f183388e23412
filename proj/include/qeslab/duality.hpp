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

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qeslab/algebra/rational.hpp"
#include "qeslab/errors.hpp"

namespace qeslab {

/// Partner exponents with (alpha + 2)(alpha_bar + 2) = 4.
struct ExponentPair {
  Rational alpha;
  Rational alpha_bar;

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// alpha_bar = -2 alpha / (alpha + 2).
inline Rational dual_exponent(const Rational& alpha) {
  if (alpha == Rational(-2)) throw SingularExponent("dual_exponent: alpha = -2 has no partner");
  return Rational(-2) * alpha / (alpha + Rational(2));
}

inline ExponentPair exponent_pair(const Rational& alpha) { return {alpha, dual_exponent(alpha)}; }

/// Every integer alpha whose partner is also an integer.
///
/// alpha_bar + 2 = 4/(alpha + 2), so both are integers exactly when
/// alpha + 2 divides 4. The window |alpha| <= window is searched
/// exhaustively; outside it |alpha + 2| > 4 forces 0 < |alpha_bar + 2| < 1,
/// which certifies that nothing is missed.
inline std::vector<ExponentPair> enumerate_integer_duals(long window = 64) {
  if (window < 6) throw DomainError("enumerate_integer_duals: window must cover |alpha| <= 6");
  std::vector<ExponentPair> out;
  for (long a = -window; a <= window; ++a) {
    if (a == -2) continue;
    const Rational bar = dual_exponent(Rational(a));
    if (bar.is_integer()) out.push_back({Rational(a), bar});
  }
  return out;
}

struct Admissibility {
  bool admissible = false;
  std::string reason;

  friend bool operator==(const Admissibility&, const Admissibility&) = default;
};

/// alpha must be an integer not below -2.
inline Admissibility sl2_admissible(const Rational& alpha) {
  if (!alpha.is_integer()) return {false, "non-integer"};
  if (alpha < Rational(-2)) return {false, "below -2"};
  return {true, ""};
}

struct ClassificationRow {
  Rational alpha;
  std::optional<Rational> alpha_bar;
  bool integer_partner = false;
  Admissibility admissibility;
  /// Both partners admissible.
  bool pair_admissible = false;
  std::string annotation;

  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

inline std::string exponent_annotation(const Rational& alpha) {
  static const std::vector<std::pair<long, const char*>> named = {
      {-1, "Coulomb"}, {0, "free particle"}, {2, "harmonic oscillator"}, {-4, "self-dual"}};
  if (alpha == Rational(-2)) return "singular, no partner";
  if (alpha.is_integer())
    for (const auto& [a, name] : named)
      if (alpha == Rational(a)) return name;
  if (alpha == Rational(3) || alpha == Rational(4) || alpha == Rational(6))
    return "QES only; fractional partner " + dual_exponent(alpha).str();
  return "";
}

/// Tabulates integer exponents in [lo, hi].
inline std::vector<ClassificationRow> classify_exponents(long lo, long hi) {
  if (lo > hi) throw DomainError("classify_exponents: empty range");
  std::vector<ClassificationRow> rows;
  for (long a = lo; a <= hi; ++a) {
    ClassificationRow row;
    row.alpha = Rational(a);
    row.admissibility = sl2_admissible(row.alpha);
    if (a != -2) {
      row.alpha_bar = dual_exponent(row.alpha);
      row.integer_partner = row.alpha_bar->is_integer();
      row.pair_admissible = row.admissibility.admissible && sl2_admissible(*row.alpha_bar).admissible;
    }
    row.annotation = exponent_annotation(row.alpha);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Radial problem -u''/2 + (lambda r^alpha + l(l+1)/(2r^2)) u = E u.
struct RadialParameters {
  Rational lambda;
  Rational l;
  std::optional<Rational> energy;

  friend bool operator==(const RadialParameters&, const RadialParameters&) = default;
};

enum class Direction { forward, inverse };

namespace detail {

inline void check_pair(const ExponentPair& pair) {
  if (!(dual_exponent(pair.alpha) == pair.alpha_bar))
    throw DomainError("exponent pair is not dual: " + pair.alpha.str() + ", " + pair.alpha_bar.str());
  if (pair.alpha.is_zero()) throw UnsupportedPair("the free particle has no coupling/energy exchange");
}

inline bool is_coulomb_oscillator(const ExponentPair& p) {
  return (p.alpha == Rational(-1) && p.alpha_bar == Rational(2)) ||
         (p.alpha == Rational(2) && p.alpha_bar == Rational(-1));
}

}  // namespace detail

/// Maps the parameters of the alpha problem to its partner; inverse maps
/// barred parameters back. Couplings and energies swap as
/// lambda_bar = -(abar^2/a^2) E, E_bar = -(abar^2/a^2) lambda. The
/// centrifugal map is only known for the Coulomb/oscillator pair, where
/// l_bar = 2l + 1/2 for alpha = -1.
inline RadialParameters dual_parameters(const RadialParameters& params, const ExponentPair& pair,
                                        Direction direction = Direction::forward) {
  detail::check_pair(pair);
  if (!params.energy) throw MissingEnergy("dual_parameters: an energy is required");
  if (!detail::is_coulomb_oscillator(pair))
    throw UnsupportedPair("dual_parameters: the centrifugal map is only available for (-1, 2)");
  if (params.l < Rational(-1, 2)) throw DomainError("dual_parameters: l must be >= -1/2");
  // forward along (a, abar) is the inverse along (abar, a)
  const bool from_coulomb = (pair.alpha == Rational(-1)) == (direction == Direction::forward);
  const Rational ratio = direction == Direction::forward
                             ? pair.alpha_bar * pair.alpha_bar / (pair.alpha * pair.alpha)
                             : pair.alpha * pair.alpha / (pair.alpha_bar * pair.alpha_bar);
  RadialParameters out;
  out.lambda = -ratio * *params.energy;
  out.energy = -ratio * params.lambda;
  out.l = from_coulomb ? Rational(2) * params.l + Rational(1, 2) : (params.l - Rational(1, 2)) / Rational(2);
  if (out.l < Rational(-1, 2)) throw DomainError("dual_parameters: mapped l is below -1/2");
  return out;
}

struct ProportionalityGrid {
  double r_min = 0.5;
  double r_max = 5.0;
  double step = 1e-3;

  friend bool operator==(const ProportionalityGrid&, const ProportionalityGrid&) = default;
};

/// Exponent of the gauge factor u = r_bar^g u_bar: +abar/4 makes the
/// identity exact; the negated value is kept for comparison.
enum class GaugeExponent { derived, negated };

struct ProportionalityOptions {
  double tolerance = 1e-6;
  GaugeExponent gauge = GaugeExponent::derived;
};

struct ProportionalityReport {
  ExponentPair pair;
  RadialParameters params;
  RadialParameters dual;
  ProportionalityGrid grid;
  GaugeExponent gauge = GaugeExponent::derived;
  double residual = 0.0;             // relative
  double absolute_residual = 0.0;
  double truncation_estimate = 0.0;  // relative
  double scale = 0.0;
  std::size_t points = 0;
  bool passed = false;

  friend bool operator==(const ProportionalityReport&, const ProportionalityReport&) = default;
};

inline std::string gauge_exponent_name(GaugeExponent g) {
  return g == GaugeExponent::derived ? "derived" : "negated";
}

/// Checks (H - E) u = (a^2/abar^2) rb^(2 + 2 abar/a) rb^g (H_bar - E_bar) u_bar
/// with r = rb^(-abar/a) and u = rb^g u_bar, both sides by fourth-order
/// central differences at steps h and h/2. The Richardson-extrapolated
/// residual is returned relative to the largest sampled |(H - E) u|.
/// l_bar defaults to the mapped angular momentum when the pair has one.
inline ProportionalityReport operator_proportionality_check(const Rational& alpha, const RadialParameters& params,
                                                            const std::function<double(double)>& u_bar,
                                                            const ProportionalityGrid& grid = {},
                                                            const ProportionalityOptions& options = {},
                                                            std::optional<Rational> l_bar = std::nullopt) {
  ProportionalityReport report;
  report.pair = exponent_pair(alpha);
  detail::check_pair(report.pair);
  if (!params.energy) throw MissingEnergy("operator_proportionality_check: an energy is required");
  if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min) || !(grid.step > 0.0))
    throw GridError("operator_proportionality_check: need 0 < r_min < r_max and step > 0");
  const Rational ratio = report.pair.alpha_bar * report.pair.alpha_bar / (alpha * alpha);
  RadialParameters dual;
  dual.lambda = -ratio * *params.energy;
  dual.energy = -ratio * params.lambda;
  if (l_bar) {
    dual.l = *l_bar;
  } else {
    dual.l = dual_parameters(params, report.pair).l;
  }
  report.params = params;
  report.dual = dual;
  report.grid = grid;
  report.gauge = options.gauge;

  const double a = alpha.to_double(), ab = report.pair.alpha_bar.to_double();
  const double mu = -ab / a;  // r = rb^mu
  const double g = (options.gauge == GaugeExponent::derived ? 1.0 : -1.0) * ab / 4.0;
  const double lam = params.lambda.to_double(), E = params.energy->to_double();
  const double cent = (params.l * (params.l + Rational(1)) / Rational(2)).to_double();
  const double lam_b = dual.lambda.to_double(), E_b = dual.energy->to_double();
  const double cent_b = (dual.l * (dual.l + Rational(1)) / Rational(2)).to_double();
  const double prefactor = (alpha * alpha / (report.pair.alpha_bar * report.pair.alpha_bar)).to_double();
  const double power = 2.0 + 2.0 * ab / a;

  const auto u = [&](double r) {
    const double rb = std::pow(r, 1.0 / mu);
    return std::pow(rb, g) * u_bar(rb);
  };
  const auto second = [](const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
  };
  const std::function<double(double)> uf = u;

  const std::size_t n = static_cast<std::size_t>(std::floor((grid.r_max - grid.r_min) / grid.step + 1e-9)) + 1;
  report.points = n;
  double max_abs = 0.0, max_trunc = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rb = grid.r_min + static_cast<double>(i) * grid.step;
    const double r = std::pow(rb, mu);
    const double hr = grid.step * std::abs(mu) * std::pow(rb, mu - 1.0);
    const double hb = grid.step;
    const double ur = u(r), ubr = u_bar(rb);
    const auto lhs = [&](double h) {
      return -0.5 * second(uf, r, h) + (lam * std::pow(r, a) + cent / (r * r) - E) * ur;
    };
    const auto rhs = [&](double h) {
      const double hbar = -0.5 * second(u_bar, rb, h) + (lam_b * std::pow(rb, ab) + cent_b / (rb * rb) - E_b) * ubr;
      return prefactor * std::pow(rb, power) * std::pow(rb, g) * hbar;
    };
    const double l1 = lhs(hr), l2 = lhs(hr / 2), r1 = rhs(hb), r2 = rhs(hb / 2);
    const double le = l2 + (l2 - l1) / 15.0, re = r2 + (r2 - r1) / 15.0;
    max_abs = std::max(max_abs, std::abs(le - re));
    max_trunc = std::max(max_trunc, (std::abs(l2 - l1) + std::abs(r2 - r1)) / 15.0);
    scale = std::max({scale, std::abs(le), std::abs(re)});
  }
  report.scale = scale;
  report.absolute_residual = max_abs;
  report.residual = scale > 0.0 ? max_abs / scale : 0.0;
  report.truncation_estimate = scale > 0.0 ? max_trunc / scale : 0.0;
  report.passed = report.residual <= options.tolerance;
  if (report.truncation_estimate > std::max(report.residual, options.tolerance))
    throw GridTooCoarse("operator_proportionality_check: truncation estimate " +
                        std::to_string(report.truncation_estimate) + " exceeds the residual");
  return report;
}

}  // namespace qeslab
