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
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <limits>
#include <map>

#include "qeslab/qes/gauge.hpp"

namespace qeslab {

/// One unknown scalar of a generator family.
struct CouplingSlot {
  enum class Kind { quadratic, linear, minus_zero };
  Kind kind = Kind::linear;
  Generator a = Generator::plus;
  Generator b = Generator::plus;

  static CouplingSlot quadratic(Generator a, Generator b) { return {Kind::quadratic, a, b}; }
  static CouplingSlot linear(Generator a) { return {Kind::linear, a, Generator::plus}; }
  static CouplingSlot minus_zero() { return {Kind::minus_zero, Generator::minus, Generator::zero}; }

  std::string name() const {
    switch (kind) {
      case Kind::quadratic: return "C_{" + generator_name(a) + generator_name(b) + "}";
      case Kind::linear: return "C_{" + generator_name(a) + "}";
      case Kind::minus_zero: return "C_{-0}";
    }
    return "?";
  }
  void assign(GeneratorCoefficients& coeffs, const Rational& value) const {
    switch (kind) {
      case Kind::quadratic: coeffs.set(a, b, value); break;
      case Kind::linear: coeffs.set(a, value); break;
      case Kind::minus_zero: coeffs.set_minus_zero(value); break;
    }
  }
};

/// Generator family with fixed part and up to three unknown couplings.
struct CouplingFamily {
  SpinLabel j{0};
  GeneratorCoefficients fixed;
  std::vector<CouplingSlot> unknowns;
};

struct MatchOptions {
  /// Impose |c| = 1 in x = c xi^((2-n)/2), fixing the coupling inside P4.
  bool normalize_scale = true;
  /// Family exponents absent from the target must vanish when they depend
  /// on the unknowns; otherwise they are only reported.
  bool impose_extra_terms = true;
  Branch branch = Branch::automatic;
  double tolerance = 1e-9;
  double search_radius = 64.0;
};

struct ExponentCheck {
  Rational exponent;
  double target = 0.0;
  double achieved = 0.0;
  double residual = 0.0;
  bool hard = false;
  bool depends_on_unknowns = false;

  friend bool operator==(const ExponentCheck&, const ExponentCheck&) = default;
};

struct CouplingSolution {
  std::vector<double> values;
  std::vector<std::optional<Rational>> exact;
  std::vector<bool> free;
  double energy_shift = 0.0;
  std::vector<ExponentCheck> checks;
  bool exact_match = false;

  friend bool operator==(const CouplingSolution&, const CouplingSolution&) = default;
};

struct MatchResult {
  bool feasible = false;
  std::vector<std::string> unknown_names;
  std::vector<CouplingSolution> solutions;
  std::optional<Rational> witness_exponent;
  std::string reason;
  std::vector<std::string> notes;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

namespace detail {

struct Value {
  double approx = 0.0;
  std::optional<Rational> exact;
};

// Quadratic polynomial in the free unknowns: c + a.u + sum_{i<=k} b_ik u_i u_k.
struct QuadModel {
  QuadraticSurd c;
  std::vector<QuadraticSurd> a;
  std::vector<std::vector<QuadraticSurd>> b;  // upper triangle

  bool depends() const {
    for (const auto& v : a)
      if (!v.is_zero()) return true;
    for (const auto& row : b)
      for (const auto& v : row)
        if (!v.is_zero()) return true;
    return false;
  }
};

// Equation restricted to one variable after substituting assignments.
struct Reduced {
  double c = 0.0;
  std::vector<double> a;
  std::vector<std::vector<double>> b;
  std::optional<Rational> cx;
  std::vector<std::optional<Rational>> ax;
  std::vector<std::vector<std::optional<Rational>>> bx;
};

inline std::optional<Rational> rational_of(const QuadraticSurd& s) { return s.as_rational(); }

}  // namespace detail

/// Matches V(x) of a generator family against a target potential.
///
/// The unknown inside P4 (at most one) is fixed by the normalization
/// |c| = 1. The remaining unknowns enter V quadratically; those
/// coefficients are recovered exactly by interpolation and the resulting
/// system is solved by univariate elimination (exact roots when the
/// discriminant is a rational square) with a Gauss-Newton multistart for
/// coupled leftovers. Constant terms are returned as an energy shift.
inline MatchResult match_couplings(const RationalPowerSum& target, const CouplingFamily& family,
                                   const MatchOptions& options = {}) {
  using detail::QuadModel;
  using detail::Value;
  const std::size_t m = family.unknowns.size();
  if (m > 3) throw UnsupportedFamily("match_couplings: at most three unknowns are supported");

  MatchResult result;
  for (const auto& s : family.unknowns) result.unknown_names.push_back(s.name());

  // The differential form is linear in the couplings.
  const auto form_of = [&](const GeneratorCoefficients& c) {
    return DifferentialForm::from_operator(differential_operator(c, family.j));
  };
  const DifferentialForm base = form_of(family.fixed);
  std::vector<DifferentialForm> unit(m);
  for (std::size_t i = 0; i < m; ++i) {
    GeneratorCoefficients c;
    family.unknowns[i].assign(c, Rational(1));
    unit[i] = form_of(c);
  }

  std::set<int> p4_degrees;
  for (const auto& [deg, c] : base.p4.terms()) p4_degrees.insert(deg);
  std::vector<std::size_t> in_p4;
  for (std::size_t i = 0; i < m; ++i)
    if (!unit[i].p4.is_zero()) {
      in_p4.push_back(i);
      for (const auto& [deg, c] : unit[i].p4.terms()) p4_degrees.insert(deg);
    }
  if (p4_degrees.empty()) throw NonMonomial("match_couplings: family has no second-order term");
  if (p4_degrees.size() > 1) throw NonMonomial("match_couplings: P4 of the family is not a monomial");
  if (in_p4.size() > 1) throw UnsupportedFamily("match_couplings: at most one unknown may enter P4");
  const int n = *p4_degrees.begin();
  if (n == 2) throw ExponentialCase("match_couplings: P4 proportional to xi^2");

  std::vector<Value> fixed_values(m);
  std::vector<bool> is_fixed(m, false);
  if (!in_p4.empty()) {
    const std::size_t i = in_p4.front();
    if (!options.normalize_scale)
      throw UnsupportedFamily("match_couplings: an unknown inside P4 needs normalize_scale");
    const Rational target_p = Rational(4) / (Rational(2 - n) * Rational(2 - n));
    const Rational wanted = options.branch == Branch::negated ? -target_p : target_p;
    const Rational value = (wanted - base.p4.coefficient(n)) / unit[i].p4.coefficient(n);
    fixed_values[i] = {value.to_double(), value};
    is_fixed[i] = true;
    result.notes.push_back(family.unknowns[i].name() + " = " + value.str() + " fixed by |c| = 1");
  } else if (options.normalize_scale) {
    const Rational p = abs(base.p4.coefficient(n));
    if (!(p == Rational(4) / (Rational(2 - n) * Rational(2 - n))))
      result.notes.push_back("P4 is fixed and not normalized; the exact map scale is used");
  }

  std::vector<std::size_t> free_index;  // unknowns still to solve
  for (std::size_t i = 0; i < m; ++i)
    if (!is_fixed[i]) free_index.push_back(i);
  const std::size_t r = free_index.size();

  // V at a rational point of the free unknowns.
  const auto potential_at = [&](const std::vector<Rational>& free_values) {
    GeneratorCoefficients coeffs = family.fixed;
    for (std::size_t i = 0; i < m; ++i)
      if (is_fixed[i]) family.unknowns[i].assign(coeffs, *fixed_values[i].exact);
    DifferentialForm form = form_of(coeffs);
    for (std::size_t k = 0; k < r; ++k) {
      const auto& u = unit[free_index[k]];
      form.p4 += free_values[k] * u.p4;
      form.p3 += free_values[k] * u.p3;
      form.p2 += free_values[k] * u.p2;
    }
    const CoordinateMap map = coordinate_map(form, options.branch);
    return gauge_data(form, map).V;
  };

  // Exact quadratic model of every V coefficient by interpolation.
  std::map<Rational, QuadModel> models;
  {
    const auto zero_vec = std::vector<Rational>(r, Rational(0));
    std::vector<SurdPowerSum> plus(r), minus(r);
    std::vector<std::vector<SurdPowerSum>> pair(r, std::vector<SurdPowerSum>(r));
    const SurdPowerSum v0 = potential_at(zero_vec);
    for (std::size_t i = 0; i < r; ++i) {
      auto e = zero_vec;
      e[i] = Rational(1);
      plus[i] = potential_at(e);
      e[i] = Rational(-1);
      minus[i] = potential_at(e);
      for (std::size_t k = i + 1; k < r; ++k) {
        auto f = zero_vec;
        f[i] = Rational(1);
        f[k] = Rational(1);
        pair[i][k] = potential_at(f);
      }
    }
    std::set<Rational> exps;
    const auto collect = [&](const SurdPowerSum& s) {
      for (const auto& [e, c] : s.terms()) exps.insert(e);
    };
    collect(v0);
    for (std::size_t i = 0; i < r; ++i) {
      collect(plus[i]);
      collect(minus[i]);
      for (std::size_t k = i + 1; k < r; ++k) collect(pair[i][k]);
    }
    const QuadraticSurd half(Rational(1, 2));
    for (const auto& e : exps) {
      QuadModel q;
      q.c = v0.coefficient(e);
      q.a.resize(r);
      q.b.assign(r, std::vector<QuadraticSurd>(r));
      for (std::size_t i = 0; i < r; ++i) {
        q.a[i] = half * (plus[i].coefficient(e) - minus[i].coefficient(e));
        q.b[i][i] = half * (plus[i].coefficient(e) + minus[i].coefficient(e)) - q.c;
      }
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = i + 1; k < r; ++k)
          q.b[i][k] = pair[i][k].coefficient(e) - q.c - q.a[i] - q.a[k] - q.b[i][i] - q.b[k][k];
      models[e] = std::move(q);
    }
    // spot check at an off-stencil point
    if (r > 0) {
      std::vector<Rational> probe;
      for (std::size_t i = 0; i < r; ++i) probe.push_back(Rational(static_cast<long>(2 * i + 3), 7));
      const SurdPowerSum vp = potential_at(probe);
      for (const auto& [e, q] : models) {
        QuadraticSurd val = q.c;
        for (std::size_t i = 0; i < r; ++i) {
          val += q.a[i] * probe[i];
          for (std::size_t k = i; k < r; ++k) val += q.b[i][k] * probe[i] * probe[k];
        }
        if (!(val == vp.coefficient(e)))
          throw Error("match_couplings: potential is not quadratic in the free couplings");
      }
      for (const auto& [e, c] : vp.terms())
        if (!models.count(e)) throw Error("match_couplings: potential is not quadratic in the free couplings");
    }
  }

  // Equations.
  struct Equation {
    Rational exponent;
    Rational target;
    const QuadModel* model;
    bool hard;
  };
  std::vector<Equation> equations;
  std::set<Rational> all_exps;
  for (const auto& [e, c] : target.terms())
    if (!e.is_zero()) all_exps.insert(e);
  for (const auto& [e, q] : models)
    if (!e.is_zero()) all_exps.insert(e);
  static const QuadModel kZeroModel{};
  std::map<Rational, QuadModel> padded;
  for (const auto& e : all_exps) {
    const auto it = models.find(e);
    if (it == models.end()) {
      QuadModel z;
      z.a.resize(r);
      z.b.assign(r, std::vector<QuadraticSurd>(r));
      padded[e] = z;
    }
  }
  for (const auto& e : all_exps) {
    const QuadModel* q = models.count(e) ? &models.at(e) : &padded.at(e);
    const bool in_target = !target.coefficient(e).is_zero();
    const bool hard = in_target || (options.impose_extra_terms && q->depends());
    equations.push_back({e, target.coefficient(e), q, hard});
  }

  // Recursive elimination over the free unknowns.
  std::vector<std::vector<Value>> found;
  std::optional<Rational> witness;
  std::string witness_reason;
  const auto record_failure = [&](const Rational& e, const std::string& why) {
    if (!witness || e < *witness) {
      witness = e;
      witness_reason = why;
    }
  };

  const auto reduce = [&](const Equation& eq, const std::vector<std::optional<Value>>& assign) {
    detail::Reduced red;
    const QuadModel& q = *eq.model;
    red.a.assign(r, 0.0);
    red.b.assign(r, std::vector<double>(r, 0.0));
    red.ax.assign(r, Rational(0));
    red.bx.assign(r, std::vector<std::optional<Rational>>(r, Rational(0)));
    red.cx = detail::rational_of(q.c);
    if (red.cx) *red.cx -= eq.target;
    red.c = q.c.to_double() - eq.target.to_double();
    const auto mul = [](const std::optional<Rational>& x, const std::optional<Rational>& y) -> std::optional<Rational> {
      if (!x || !y) return std::nullopt;
      return *x * *y;
    };
    const auto add = [](std::optional<Rational>& acc, const std::optional<Rational>& y) {
      if (acc && y)
        *acc += *y;
      else
        acc.reset();
    };
    for (std::size_t i = 0; i < r; ++i) {
      const auto ai = detail::rational_of(q.a[i]);
      if (assign[i]) {
        red.c += q.a[i].to_double() * assign[i]->approx;
        add(red.cx, mul(ai, assign[i]->exact));
      } else {
        red.a[i] += q.a[i].to_double();
        add(red.ax[i], ai);
      }
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = i; k < r; ++k) {
        const double bik = q.b[i][k].to_double();
        const auto bx = detail::rational_of(q.b[i][k]);
        if (assign[i] && assign[k]) {
          red.c += bik * assign[i]->approx * assign[k]->approx;
          add(red.cx, mul(bx, mul(assign[i]->exact, assign[k]->exact)));
        } else if (assign[i]) {
          red.a[k] += bik * assign[i]->approx;
          add(red.ax[k], mul(bx, assign[i]->exact));
        } else if (assign[k]) {
          red.a[i] += bik * assign[k]->approx;
          add(red.ax[i], mul(bx, assign[k]->exact));
        } else {
          red.b[i][k] += bik;
          add(red.bx[i][k], bx);
        }
      }
    return red;
  };
  const auto is_nil = [&](double approx, const std::optional<Rational>& ex, double scale) {
    if (ex) return ex->is_zero();
    return std::abs(approx) <= 1e-12 * std::max(1.0, scale);
  };

  std::function<void(std::vector<std::optional<Value>>)> solve = [&](std::vector<std::optional<Value>> assign) {
    bool pending = false;
    for (const auto& eq : equations) {
      if (!eq.hard) continue;
      const auto red = reduce(eq, assign);
      double scale = std::abs(eq.target.to_double());
      bool depends = false;
      for (std::size_t i = 0; i < r; ++i) {
        if (!is_nil(red.a[i], red.ax[i], scale)) depends = true;
        for (std::size_t k = i; k < r; ++k)
          if (!is_nil(red.b[i][k], red.bx[i][k], scale)) depends = true;
      }
      if (!depends) {
        const bool ok = red.cx ? red.cx->is_zero()
                                : std::abs(red.c) <= options.tolerance * std::max(1.0, scale);
        if (!ok) {
          record_failure(eq.exponent, "coefficient of x^" + eq.exponent.str() + " is " +
                                          format_double(red.c + eq.target.to_double(), 6) +
                                          " and cannot reach the target " + eq.target.str());
          return;
        }
      } else {
        pending = true;
      }
    }
    if (!pending) {
      std::vector<Value> sol(r);
      for (std::size_t i = 0; i < r; ++i) sol[i] = assign[i] ? *assign[i] : Value{0.0, Rational(0)};
      found.push_back(sol);
      return;
    }
    // univariate equation?
    for (const auto& eq : equations) {
      if (!eq.hard) continue;
      const auto red = reduce(eq, assign);
      const double scale = std::abs(eq.target.to_double());
      std::optional<std::size_t> var;
      bool multi = false;
      for (std::size_t i = 0; i < r && !multi; ++i) {
        bool uses = !is_nil(red.a[i], red.ax[i], scale);
        for (std::size_t k = 0; k < r; ++k) {
          const std::size_t lo = std::min(i, k), hi = std::max(i, k);
          if (!is_nil(red.b[lo][hi], red.bx[lo][hi], scale)) {
            uses = true;
            if (k != i) multi = true;
          }
        }
        if (uses) {
          if (var) multi = true;
          var = i;
        }
      }
      if (!var || multi) continue;
      const std::size_t v = *var;
      const double qa = red.b[v][v], la = red.a[v], ca = red.c;
      const auto qx = red.bx[v][v], lx = red.ax[v], cx = red.cx;
      std::vector<Value> roots;
      if (is_nil(qa, qx, scale)) {
        Value root{-ca / la, std::nullopt};
        if (lx && cx) root.exact = -*cx / *lx;
        roots.push_back(root);
      } else if (qx && lx && cx) {
        const Rational disc = *lx * *lx - Rational(4) * *qx * *cx;
        if (disc.sign() < 0) {
          record_failure(eq.exponent, "coefficient of x^" + eq.exponent.str() + " has no real solution");
          return;
        }
        const QuadraticSurd root_disc = QuadraticSurd::sqrt(disc);
        for (int sgn : {-1, 1}) {
          const QuadraticSurd root = (QuadraticSurd(-*lx) + QuadraticSurd(sgn) * root_disc) / QuadraticSurd(Rational(2) * *qx);
          roots.push_back({root.to_double(), root.as_rational()});
          if (disc.is_zero()) break;
        }
      } else {
        const double disc = la * la - 4.0 * qa * ca;
        if (disc < -1e-12 * std::max(1.0, la * la)) {
          record_failure(eq.exponent, "coefficient of x^" + eq.exponent.str() + " has no real solution");
          return;
        }
        const double sq = std::sqrt(std::max(disc, 0.0));
        roots.push_back({(-la - sq) / (2.0 * qa), std::nullopt});
        if (sq > 0.0) roots.push_back({(-la + sq) / (2.0 * qa), std::nullopt});
      }
      for (const auto& root : roots) {
        auto next = assign;
        next[v] = root;
        solve(next);
      }
      return;
    }
    // coupled leftovers: Gauss-Newton multistart on the hard equations
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < r; ++i)
      if (!assign[i]) open.push_back(i);
    const auto residuals = [&](const std::vector<double>& x) {
      std::vector<double> out;
      auto trial = assign;
      for (std::size_t t = 0; t < open.size(); ++t) trial[open[t]] = Value{x[t], std::nullopt};
      for (const auto& eq : equations)
        if (eq.hard) out.push_back(reduce(eq, trial).c);
      return out;
    };
    const std::vector<double> seeds = {-options.search_radius / 8, -1.0, -0.3, 0.3, 1.0, options.search_radius / 8};
    std::vector<std::vector<double>> starts{{}};
    for (std::size_t t = 0; t < open.size(); ++t) {
      std::vector<std::vector<double>> next;
      for (const auto& s : starts)
        for (double seed : seeds) {
          auto x = s;
          x.push_back(seed);
          next.push_back(x);
        }
      starts = next;
    }
    bool any = false;
    double best = std::numeric_limits<double>::infinity();
    for (auto x : starts) {
      for (int it = 0; it < 100; ++it) {
        const auto f = residuals(x);
        const std::size_t ne = f.size(), nv = x.size();
        Eigen::MatrixXd jac(ne, nv);
        for (std::size_t t = 0; t < nv; ++t) {
          auto xp = x;
          const double h = 1e-7 * std::max(1.0, std::abs(x[t]));
          xp[t] += h;
          const auto fp = residuals(xp);
          for (std::size_t e = 0; e < ne; ++e) jac(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(t)) = (fp[e] - f[e]) / h;
        }
        Eigen::VectorXd fv(ne);
        for (std::size_t e = 0; e < ne; ++e) fv(static_cast<Eigen::Index>(e)) = f[e];
        const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-fv);
        for (std::size_t t = 0; t < nv; ++t) x[t] += step(static_cast<Eigen::Index>(t));
        if (step.norm() < 1e-14 * std::max(1.0, Eigen::Map<Eigen::VectorXd>(x.data(), static_cast<Eigen::Index>(nv)).norm())) break;
      }
      const auto f = residuals(x);
      double worst = 0.0;
      for (double v : f) worst = std::max(worst, std::abs(v));
      best = std::min(best, worst);
      if (worst <= options.tolerance) {
        auto next = assign;
        for (std::size_t t = 0; t < open.size(); ++t) next[open[t]] = Value{x[t], std::nullopt};
        bool duplicate = false;
        for (const auto& s : found) {
          double d = 0.0;
          for (std::size_t t = 0; t < open.size(); ++t) d = std::max(d, std::abs(s[open[t]].approx - x[t]));
          if (d < 1e-7) duplicate = true;
        }
        if (!duplicate) {
          std::vector<Value> sol(r);
          for (std::size_t i = 0; i < r; ++i) sol[i] = *next[i];
          found.push_back(sol);
        }
        any = true;
      }
    }
    if (!any) {
      for (const auto& eq : equations)
        if (eq.hard) {
          record_failure(eq.exponent, "coupled system has no solution (best residual " + format_double(best, 6) + ")");
          break;
        }
    }
  };

  solve(std::vector<std::optional<Value>>(r));

  if (found.empty()) {
    result.feasible = false;
    result.witness_exponent = witness;
    result.reason = witness_reason;
    return result;
  }

  result.feasible = true;
  for (const auto& sol : found) {
    CouplingSolution out;
    out.values.assign(m, 0.0);
    out.exact.assign(m, std::nullopt);
    out.free.assign(m, false);
    std::vector<std::optional<Value>> as_assign(r);
    for (std::size_t i = 0; i < m; ++i)
      if (is_fixed[i]) {
        out.values[i] = fixed_values[i].approx;
        out.exact[i] = fixed_values[i].exact;
      }
    bool all_exact = true;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t i = free_index[k];
      out.values[i] = sol[k].approx;
      out.exact[i] = sol[k].exact;
      all_exact = all_exact && sol[k].exact.has_value();
      as_assign[k] = sol[k];
      bool constrained = false;
      for (const auto& eq : equations) {
        if (!eq.hard) continue;
        if (!eq.model->a[k].is_zero()) constrained = true;
        for (std::size_t t = 0; t < r; ++t)
          if (!eq.model->b[std::min(k, t)][std::max(k, t)].is_zero()) constrained = true;
      }
      out.free[i] = !constrained;
    }
    for (const auto& eq : equations) {
      const auto red = reduce(eq, as_assign);
      ExponentCheck check;
      check.exponent = eq.exponent;
      check.target = eq.target.to_double();
      check.residual = red.cx ? red.cx->to_double() : red.c;
      check.achieved = check.target + check.residual;
      check.hard = eq.hard;
      check.depends_on_unknowns = eq.model->depends();
      out.checks.push_back(check);
    }
    // constant term -> energy shift
    const auto it0 = models.find(Rational(0));
    {
      Equation eq0{Rational(0), target.coefficient(Rational(0)), nullptr, false};
      QuadModel zero;
      zero.a.resize(r);
      zero.b.assign(r, std::vector<QuadraticSurd>(r));
      eq0.model = it0 == models.end() ? &zero : &it0->second;
      const auto red = reduce(eq0, as_assign);
      out.energy_shift = red.cx ? red.cx->to_double() : red.c;
    }
    out.exact_match = all_exact;
    for (const auto& c : out.checks)
      if (c.hard && c.residual != 0.0) out.exact_match = false;
    result.solutions.push_back(std::move(out));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const CouplingSolution& a, const CouplingSolution& b) { return a.values < b.values; });
  return result;
}

/// Families used throughout: the Coulomb family C_{++} T+T+ + C_+ T+, the
/// oscillator family C_{-0} T^-0 + C_+ T+, the weight family
/// C_{-0} T^-0 + C_0 T0 and the free family C_{--} T-T-.
inline CouplingFamily coulomb_family(SpinLabel j) {
  return {j, {}, {CouplingSlot::quadratic(Generator::plus, Generator::plus), CouplingSlot::linear(Generator::plus)}};
}
inline CouplingFamily oscillator_family(SpinLabel j) {
  return {j, {}, {CouplingSlot::minus_zero(), CouplingSlot::linear(Generator::plus)}};
}
inline CouplingFamily weight_family(SpinLabel j) {
  return {j, {}, {CouplingSlot::minus_zero(), CouplingSlot::linear(Generator::zero)}};
}
inline CouplingFamily free_family(SpinLabel j) {
  return {j, {}, {CouplingSlot::quadratic(Generator::minus, Generator::minus)}};
}

}  // namespace qeslab
