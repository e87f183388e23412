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
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qeslab/algebra/rational.hpp"
#include "qeslab/errors.hpp"
#include "qeslab/format.hpp"

namespace qeslab {

/// Uniform grid r_i = r_min + i h, i = 0..intervals, Dirichlet at both ends.
struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 60.0;
  std::size_t intervals = 4000;

  double step() const { return (r_max - r_min) / static_cast<double>(intervals); }
  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

/// r_max = 60 for alpha < 0, 12 otherwise; r_min = 1e-4; 4000 intervals.
inline RadialGrid default_grid(const Rational& alpha) {
  return {1e-4, alpha.sign() < 0 ? 60.0 : 12.0, 4000};
}

/// -u''/2 + (lambda r^alpha + l(l+1)/(2 r^2)) u = E u. lambda < 0 is
/// attractive for alpha < 0.
struct RadialProblem {
  Rational alpha{-1};
  double lambda = -1.0;
  Rational l{0};
  RadialGrid grid = default_grid(Rational(-1));

  double potential(double r) const {
    const double cent = (l * (l + Rational(1)) / Rational(2)).to_double();
    return lambda * std::pow(r, alpha.to_double()) + cent / (r * r);
  }

  friend bool operator==(const RadialProblem&, const RadialProblem&) = default;
};

inline RadialProblem radial_problem(const Rational& alpha, double lambda, const Rational& l) {
  return {alpha, lambda, l, default_grid(alpha)};
}

struct SpectrumResult {
  std::vector<double> eigenvalues;      // Richardson-extrapolated, ascending
  std::vector<double> error_estimates;  // |E_N - E_2N| / 3
  std::vector<double> coarse;           // E_N
  std::vector<double> fine;             // E_2N
  RadialGrid grid_used;

  friend bool operator==(const SpectrumResult&, const SpectrumResult&) = default;
};

namespace detail {

struct Tridiagonal {
  std::vector<double> diag;
  double off = 0.0;  // constant off-diagonal
};

inline Tridiagonal radial_matrix(const RadialProblem& p, std::size_t intervals) {
  const double h = (p.grid.r_max - p.grid.r_min) / static_cast<double>(intervals);
  Tridiagonal t;
  t.diag.resize(intervals - 1);
  for (std::size_t i = 1; i < intervals; ++i) {
    const double r = p.grid.r_min + static_cast<double>(i) * h;
    t.diag[i - 1] = 1.0 / (h * h) + p.potential(r);
  }
  t.off = -0.5 / (h * h);
  return t;
}

/// Number of eigenvalues strictly below x.
inline std::size_t sturm_count(const Tridiagonal& t, double x) {
  const double b2 = t.off * t.off;
  const double tiny = std::numeric_limits<double>::min() * 1e3;
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    d = t.diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

/// Lowest k eigenvalues by bisection.
inline std::vector<double> lowest_eigenvalues(const Tridiagonal& t, std::size_t k) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double d : t.diag) {
    lo = std::min(lo, d - 2.0 * std::abs(t.off));
    hi = std::max(hi, d + 2.0 * std::abs(t.off));
  }
  std::vector<double> out;
  for (std::size_t idx = 0; idx < k; ++idx) {
    double a = out.empty() ? lo : out.back(), b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count(t, mid) > idx)
        b = mid;
      else
        a = mid;
      if (b - a <= 1e-15 * std::max(1.0, std::abs(mid))) break;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

inline void validate(const RadialProblem& p, std::size_t levels) {
  const RadialGrid& g = p.grid;
  if (!(g.r_min > 0.0)) throw GridError("solve_radial: r_min must be positive");
  if (!(g.r_min < g.r_max)) throw GridError("solve_radial: r_min must be below r_max");
  if (g.intervals < 100) throw GridError("solve_radial: at least 100 intervals are required");
  if (p.alpha <= Rational(-2)) throw DomainError("solve_radial: alpha <= -2 is outside the supported regime");
  if (p.l < Rational(-1, 2)) throw DomainError("solve_radial: l must be >= -1/2");
  if (levels > 20) throw DomainError("solve_radial: at most 20 levels");
  if (!std::isfinite(p.lambda)) throw DomainError("solve_radial: lambda must be finite");
  if (p.alpha.sign() > 0 && p.lambda < 0.0)
    throw NotConfining("solve_radial: lambda < 0 with alpha > 0 does not confine");
  if (p.alpha.sign() < 0 && p.lambda > 0.0)
    throw NotConfining("solve_radial: lambda > 0 with alpha < 0 admits no bound state");
}

}  // namespace detail

/// Lowest levels of the three-point discretization at N and 2N intervals,
/// combined by Richardson extrapolation for the O(h^2) scheme.
inline SpectrumResult solve_radial(const RadialProblem& problem, std::size_t levels) {
  detail::validate(problem, levels);
  SpectrumResult out;
  out.grid_used = problem.grid;
  if (levels == 0) return out;
  out.coarse = detail::lowest_eigenvalues(detail::radial_matrix(problem, problem.grid.intervals), levels);
  out.fine = detail::lowest_eigenvalues(detail::radial_matrix(problem, 2 * problem.grid.intervals), levels);
  for (std::size_t i = 0; i < levels; ++i) {
    out.eigenvalues.push_back(out.fine[i] + (out.fine[i] - out.coarse[i]) / 3.0);
    out.error_estimates.push_back(std::abs(out.coarse[i] - out.fine[i]) / 3.0);
  }
  if (problem.alpha.sign() < 0 && problem.lambda != 0.0)
    for (std::size_t i = 0; i < levels; ++i)
      if (out.eigenvalues[i] >= 0.0)
        throw NotConfining("solve_radial: only " + std::to_string(i) + " bound states fit in r_max = " +
                           format_double(problem.grid.r_max, 6));
  return out;
}

struct DualityLevel {
  std::size_t level = 0;  // 1-based Coulomb level
  double coulomb_energy = 0.0;
  double coulomb_error = 0.0;
  double oscillator_lambda = 0.0;  // -4 E_n
  Rational oscillator_l;           // 2l + 1/2
  double expected = 0.0;           // -4 lambda
  double closest = 0.0;            // oscillator level nearest the expectation
  std::size_t oscillator_index = 0;
  double residual = 0.0;
  double combined_error = 0.0;
  bool passed = false;

  friend bool operator==(const DualityLevel&, const DualityLevel&) = default;
};

struct DualityReport {
  double lambda = 0.0;
  Rational l;
  double tolerance = 5e-3;
  std::vector<DualityLevel> levels;
  bool passed() const {
    return std::all_of(levels.begin(), levels.end(), [](const DualityLevel& d) { return d.passed; });
  }

  friend bool operator==(const DualityReport&, const DualityReport&) = default;
};

struct DualityOptions {
  double tolerance = 5e-3;
  std::optional<RadialGrid> oscillator_grid;
};

/// Maps every Coulomb level E_n to the oscillator with lambda_bar = -4E_n,
/// l_bar = 2l + 1/2 and checks that -4 lambda is in its spectrum.
inline DualityReport verify_duality(const RadialProblem& coulomb, std::size_t levels,
                                    const DualityOptions& options = {}) {
  if (!(coulomb.alpha == Rational(-1))) throw DomainError("verify_duality: the Coulomb problem needs alpha = -1");
  if (!(coulomb.lambda < 0.0)) throw NotConfining("verify_duality: the Coulomb coupling must be attractive");
  DualityReport report;
  report.lambda = coulomb.lambda;
  report.l = coulomb.l;
  report.tolerance = options.tolerance;
  if (levels == 0) return report;
  const SpectrumResult c = solve_radial(coulomb, levels);
  const Rational l_bar = Rational(2) * coulomb.l + Rational(1, 2);
  const double expected = -4.0 * coulomb.lambda;
  for (std::size_t n = 0; n < levels; ++n) {
    DualityLevel d;
    d.level = n + 1;
    d.coulomb_energy = c.eigenvalues[n];
    d.coulomb_error = c.error_estimates[n];
    d.oscillator_lambda = -4.0 * c.eigenvalues[n];
    d.oscillator_l = l_bar;
    d.expected = expected;
    RadialProblem osc{Rational(2), d.oscillator_lambda, l_bar, options.oscillator_grid.value_or(default_grid(Rational(2)))};
    const SpectrumResult o = solve_radial(osc, std::min<std::size_t>(n + 3, 20));
    std::size_t best = 0;
    for (std::size_t i = 1; i < o.eigenvalues.size(); ++i)
      if (std::abs(o.eigenvalues[i] - expected) < std::abs(o.eigenvalues[best] - expected)) best = i;
    d.oscillator_index = best;
    d.closest = o.eigenvalues[best];
    d.residual = std::abs(d.closest - expected);
    d.combined_error = o.error_estimates[best] + 4.0 * d.coulomb_error;
    d.passed = d.residual <= options.tolerance;
    report.levels.push_back(d);
  }
  return report;
}

struct CouplingScan {
  double energy = 0.0;
  Rational l;
  std::vector<double> lambdas;  // -E_bar_k / 4
  std::vector<double> errors;
  SpectrumResult oscillator;

  friend bool operator==(const CouplingScan&, const CouplingScan&) = default;
};

/// Coulomb couplings whose spectra contain E_target, read off the partner
/// oscillator with lambda_bar = -4 E_target.
inline CouplingScan coulomb_couplings_from_oscillator(double energy, const Rational& l, std::size_t count,
                                                      std::optional<RadialGrid> grid = std::nullopt) {
  if (!(energy < 0.0)) throw DomainError("coulomb_couplings_from_oscillator: the target energy must be negative");
  CouplingScan scan;
  scan.energy = energy;
  scan.l = l;
  const RadialProblem osc{Rational(2), -4.0 * energy, Rational(2) * l + Rational(1, 2),
                          grid.value_or(default_grid(Rational(2)))};
  scan.oscillator = solve_radial(osc, count);
  for (std::size_t i = 0; i < count; ++i) {
    scan.lambdas.push_back(-scan.oscillator.eigenvalues[i] / 4.0);
    scan.errors.push_back(scan.oscillator.error_estimates[i] / 4.0);
  }
  return scan;
}

}  // namespace qeslab
