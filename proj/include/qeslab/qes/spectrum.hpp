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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qeslab/qes/operator.hpp"

namespace qeslab {

using Complex = std::complex<double>;

/// Eigen-decomposition of an operator on the polynomial sector. Eigenvector
/// k holds the ansatz coefficients (1, alpha, beta, ...) of psibar for
/// eigenvalue k, scaled so its lowest-degree nonzero entry is 1.
struct AlgebraicSpectrum {
  std::vector<Complex> eigenvalues;
  std::vector<std::vector<Complex>> eigenvectors;
  std::vector<double> residuals;  // ||Hv - Ev||_inf / ||v||_inf
  std::string method;

  friend bool operator==(const AlgebraicSpectrum&, const AlgebraicSpectrum&) = default;
};

struct EigenOptions {
  double residual_tolerance = 1e-10;  // relative to ||H||_inf
  double snap_tolerance = 1e-9;       // for exact-integer snapping
  bool force_characteristic = false;
};

/// Coefficients of det(t I - M), ascending, via Faddeev-LeVerrier over Q.
inline std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("characteristic_polynomial: matrix not square");
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  RationalMatrix mk(n, n);  // M_0 = 0
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const RationalMatrix amk = m * mk;
    Rational trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

inline Rational evaluate_exact(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

/// All complex roots of a real polynomial (ascending coefficients) by
/// Aberth-Ehrlich iteration followed by Newton polishing.
inline std::vector<Complex> polynomial_roots(const std::vector<double>& ascending) {
  std::vector<double> a = ascending;
  while (!a.empty() && a.back() == 0.0) a.pop_back();
  if (a.size() < 2) return {};
  const std::size_t n = a.size() - 1;
  const auto eval = [&](Complex z, Complex& deriv) {
    Complex p = a[n];
    deriv = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      deriv = deriv * z + p;
      p = p * z + a[i];
    }
    return p;
  };
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i] / a[n]));
  bound += 1.0;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(0.5 * bound, 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n));
  for (int iter = 0; iter < 500; ++iter) {
    double change = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex d;
      const Complex p = eval(z[k], d);
      if (p == 0.0) continue;
      const Complex ratio = p / d;
      Complex sum = 0.0;
      for (std::size_t l = 0; l < n; ++l)
        if (l != k) sum += 1.0 / (z[k] - z[l]);
      const Complex step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      change = std::max(change, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (change < 1e-15) break;
  }
  for (auto& root : z)
    for (int iter = 0; iter < 3; ++iter) {
      Complex d;
      const Complex p = eval(root, d);
      if (d == 0.0) break;
      root -= p / d;
    }
  return z;
}

namespace detail {

inline double inf_norm(const Eigen::MatrixXd& m) {
  return m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

inline double eigen_residual(const Eigen::MatrixXcd& h, const Eigen::VectorXcd& v, Complex e) {
  const double vn = v.cwiseAbs().maxCoeff();
  if (vn == 0.0) return std::numeric_limits<double>::infinity();
  return (h * v - e * v).cwiseAbs().maxCoeff() / vn;
}

// Null vector of (H - e I) by inverse iteration from a fixed start.
inline Eigen::VectorXcd inverse_iteration(const Eigen::MatrixXcd& h, Complex e, double scale) {
  const auto n = h.rows();
  const double shift = 1e-10 * std::max(scale, 1.0);
  Eigen::MatrixXcd shifted = h - (e + Complex(shift, shift)) * Eigen::MatrixXcd::Identity(n, n);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(shifted);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) += Complex(0.1 * static_cast<double>(i), 0.0);
  for (int it = 0; it < 4; ++it) {
    v = lu.solve(v);
    const double nv = v.cwiseAbs().maxCoeff();
    if (!(nv > 0.0) || !std::isfinite(nv)) break;
    v /= nv;
  }
  return v;
}

inline void normalize_ansatz(Eigen::VectorXcd& v) {
  const double vn = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 1e-8 * vn) {
      v /= v(i);
      break;
    }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i).imag()) <= 1e-14 * std::max(1.0, std::abs(v(i).real()))) v(i).imag(0.0);
    if (std::abs(v(i)) <= 1e-14) v(i) = 0.0;
  }
}

}  // namespace detail

/// Eigenvalues and ansatz eigenvectors of the (generally nonsymmetric)
/// sector matrix. Shifted QR first; the exact characteristic polynomial is
/// the fallback for dimension <= 4.
inline AlgebraicSpectrum algebraic_spectrum(const RationalMatrix& matrix, const EigenOptions& options = {}) {
  const auto n = static_cast<Eigen::Index>(matrix.rows());
  if (matrix.cols() != matrix.rows()) throw DomainError("algebraic_spectrum: matrix not square");
  Eigen::MatrixXd h(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      h(r, c) = matrix(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).to_double();
  const Eigen::MatrixXcd hc = h.cast<Complex>();
  const double scale = detail::inf_norm(h);
  const double tol = options.residual_tolerance * scale;

  std::vector<Complex> values;
  std::vector<Eigen::VectorXcd> vectors;
  std::string method = "shifted-qr";
  bool qr_ok = false;
  if (!options.force_characteristic) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(h, true);
    if (solver.info() == Eigen::Success) {
      qr_ok = true;
      for (Eigen::Index k = 0; k < n; ++k) {
        values.push_back(solver.eigenvalues()(k));
        vectors.emplace_back(solver.eigenvectors().col(k));
      }
    }
  }
  if (!qr_ok) {
    if (n > 4 && !options.force_characteristic)
      throw ConvergenceFailure("algebraic_spectrum: QR iteration did not converge");
    method = "characteristic-polynomial";
    const auto cp = characteristic_polynomial(matrix);
    std::vector<double> cd;
    for (const auto& c : cp) cd.push_back(c.to_double());
    values = polynomial_roots(cd);
    for (const auto& e : values) vectors.push_back(detail::inverse_iteration(hc, e, scale));
  }

  const auto charpoly = characteristic_polynomial(matrix);
  AlgebraicSpectrum out;
  out.method = method;
  std::vector<std::size_t> order(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    Complex& e = values[k];
    if (std::abs(e.imag()) <= 1e-12 * std::max(scale, 1.0)) e.imag(0.0);
    if (e.imag() == 0.0) {
      const double nearest = std::round(e.real());
      if (std::abs(e.real() - nearest) <= options.snap_tolerance * std::max(1.0, scale) &&
          std::abs(nearest) < 9e15 &&
          evaluate_exact(charpoly, Rational(static_cast<long>(nearest))).is_zero())
        e = nearest;
    }
    Eigen::VectorXcd& v = vectors[k];
    if (detail::eigen_residual(hc, v, e) > tol) v = detail::inverse_iteration(hc, e, scale);
    const double res = detail::eigen_residual(hc, v, e);
    if (!(res <= tol))
      throw ConvergenceFailure("algebraic_spectrum: eigenpair residual " + std::to_string(res) +
                               " exceeds tolerance");
    detail::normalize_ansatz(v);
    order[k] = k;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a].real() != values[b].real()) return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });
  for (std::size_t k : order) {
    out.eigenvalues.push_back(values[k]);
    out.eigenvectors.emplace_back(vectors[k].data(), vectors[k].data() + vectors[k].size());
    out.residuals.push_back(detail::eigen_residual(hc, vectors[k], values[k]));
  }
  return out;
}

inline AlgebraicSpectrum algebraic_spectrum(const Sl2Operator& op, const EigenOptions& options = {}) {
  return algebraic_spectrum(op.matrix, options);
}

}  // namespace qeslab
