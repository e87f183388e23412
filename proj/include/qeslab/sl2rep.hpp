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

#include <string>
#include <vector>

#include "qeslab/algebra.hpp"

namespace qeslab {

/// Spin label of a finite-dimensional sl(2) representation, stored as 2j.
class SpinLabel {
 public:
  explicit SpinLabel(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) throw DomainError("SpinLabel: 2j must be non-negative");
  }
  static SpinLabel from_j(const Rational& j) {
    const Rational twice = Rational(2) * j;
    if (!twice.is_integer() || twice.sign() < 0)
      throw DomainError("SpinLabel: j must be a non-negative half-integer");
    return SpinLabel(static_cast<int>(twice.num().get_si()));
  }

  int twice_j() const { return twice_j_; }
  std::size_t dimension() const { return static_cast<std::size_t>(twice_j_) + 1; }
  Rational j() const { return Rational(twice_j_, 2); }
  /// k = 2j - 1.
  Rational k() const { return Rational(twice_j_ - 1); }

  friend bool operator==(const SpinLabel&, const SpinLabel&) = default;

 private:
  int twice_j_;
};

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, from_rational<T>(Rational(0))) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_rational<T>(Rational(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const T& s, DenseMatrix m) {
    for (auto& v : m.data_) v = s * v;
    return m;
  }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("DenseMatrix: shape mismatch in product");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& v : data_)
      if (!is_zero(v)) return false;
    return true;
  }

  /// Matrix times coefficient vector.
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DomainError("DenseMatrix: vector length mismatch");
    std::vector<T> out(rows_, from_rational<T>(Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

 private:
  void check_same(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("DenseMatrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  return a * b - b * a;
}

enum class Generator { plus, zero, minus };

inline std::string generator_name(Generator g) {
  switch (g) {
    case Generator::plus: return "+";
    case Generator::zero: return "0";
    case Generator::minus: return "-";
  }
  return "?";
}

inline Generator parse_generator(const std::string& s) {
  if (s == "+" || s == "plus" || s == "p") return Generator::plus;
  if (s == "0" || s == "zero" || s == "z") return Generator::zero;
  if (s == "-" || s == "minus" || s == "m") return Generator::minus;
  throw ParseError("unknown generator '" + s + "' (expected +, 0 or -)");
}

/// Matrix of one generator on the monomial basis {1, xi, ..., xi^(2j)};
/// column m holds the image of xi^m.
struct GeneratorMatrix {
  Generator which;
  SpinLabel j;
  RationalMatrix matrix;
};

//   T+ xi^m = (2j - m) xi^(m+1)
//   T0 xi^m = (m - j)  xi^m
//   T- xi^m = m        xi^(m-1)
inline GeneratorMatrix generator_matrix(Generator which, SpinLabel j) {
  const std::size_t dim = j.dimension();
  RationalMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int deg = static_cast<int>(col);
    switch (which) {
      case Generator::plus:
        if (col + 1 < dim) m(col + 1, col) = Rational(j.twice_j() - deg);
        break;
      case Generator::zero:
        m(col, col) = Rational(deg) - j.j();
        break;
      case Generator::minus:
        if (col > 0) m(col - 1, col) = Rational(deg);
        break;
    }
  }
  return {which, j, std::move(m)};
}

/// Image of p under a generator, computed from the differential form of
/// the generator rather than its matrix.
inline RationalPoly apply_generator(Generator which, SpinLabel j, const RationalPoly& p) {
  if (p.degree() > j.twice_j())
    throw DegreeOverflow("apply_generator: degree " + std::to_string(p.degree()) +
                         " exceeds 2j = " + std::to_string(j.twice_j()));
  const RationalPoly xi = RationalPoly::monomial(1, Rational(1));
  switch (which) {
    case Generator::plus:
      return Rational(2) * j.j() * (xi * p) - (xi * xi) * derive(p);
    case Generator::zero:
      return xi * derive(p) - j.j() * p;
    case Generator::minus:
      return derive(p);
  }
  return {};
}

/// Outcome of checking the sl(2) relations on one representation.
struct AlgebraReport {
  SpinLabel j{0};
  bool commutators_ok = false;
  bool casimir_scalar = false;
  std::vector<std::string> failures;
  RationalMatrix casimir;
};

/// Checks [T0,T+] = T+, [T0,T-] = -T-, [T+,T-] = 2T0 and
/// C = T0 T0 + (T+T- + T-T+)/2 = j(j+1) I as exact matrix identities.
inline AlgebraReport verify_algebra(SpinLabel j) {
  const auto tp = generator_matrix(Generator::plus, j).matrix;
  const auto t0 = generator_matrix(Generator::zero, j).matrix;
  const auto tm = generator_matrix(Generator::minus, j).matrix;

  AlgebraReport report;
  report.j = j;
  if (!(commutator(t0, tp) == tp)) report.failures.push_back("[T0,T+] != T+");
  if (!(commutator(t0, tm) == Rational(-1) * tm)) report.failures.push_back("[T0,T-] != -T-");
  if (!(commutator(tp, tm) == Rational(2) * t0)) report.failures.push_back("[T+,T-] != 2T0");
  report.commutators_ok = report.failures.empty();

  report.casimir = t0 * t0 + Rational(1, 2) * (tp * tm + tm * tp);
  const Rational jj = j.j() * (j.j() + Rational(1));
  report.casimir_scalar = report.casimir == jj * RationalMatrix::identity(j.dimension());
  if (!report.casimir_scalar) report.failures.push_back("Casimir != j(j+1) I");
  return report;
}

}  // namespace qeslab
