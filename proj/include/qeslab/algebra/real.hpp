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

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "qeslab/algebra/rational.hpp"
#include "qeslab/algebra/surd.hpp"

namespace qeslab {

/// High-precision real used when coefficients leave Q(sqrt(d)).
using Real = boost::multiprecision::mpfr_float;

/// Mantissa bits for Real, from QESLAB_PRECISION (default and floor: 64).
inline unsigned real_precision_bits() {
  static const unsigned bits = [] {
    unsigned value = 64;
    if (const char* env = std::getenv("QESLAB_PRECISION")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = static_cast<unsigned>(parsed);
    }
    return std::max(value, 64u);
  }();
  return bits;
}

inline void ensure_real_precision() {
  const unsigned digits10 =
      static_cast<unsigned>(std::ceil(real_precision_bits() * 0.30102999566398120)) + 1;
  if (Real::default_precision() != digits10) Real::default_precision(digits10);
}

inline Real to_real(const Rational& r) {
  ensure_real_precision();
  Real out;
  mpfr_set_q(out.backend().data(), r.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

inline Real to_real(const QuadraticSurd& s) {
  Real out = to_real(s.rational_part());
  if (!s.is_rational()) {
    Real d;
    mpfr_set_z(d.backend().data(), s.radicand().get_mpz_t(), MPFR_RNDN);
    out += to_real(s.surd_part()) * boost::multiprecision::sqrt(d);
  }
  return out;
}

// Coefficient-field adapters shared by Poly and PowerSum.

inline bool is_zero(const Rational& c) { return c.is_zero(); }
inline bool is_zero(const QuadraticSurd& c) { return c.is_zero(); }
inline bool is_zero(const Real& c) { return c == 0; }

inline double to_double(const Rational& c) { return c.to_double(); }
inline double to_double(const QuadraticSurd& c) { return c.to_double(); }
inline double to_double(const Real& c) { return c.convert_to<double>(); }

inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const QuadraticSurd& c) { return c.str(); }
inline std::string coeff_str(const Real& c) {
  return c.str(static_cast<std::streamsize>(Real::default_precision()));
}

template <class C>
C from_rational(const Rational& r) {
  if constexpr (std::is_same_v<C, Real>) {
    return to_real(r);
  } else {
    return C(r);
  }
}

/// base^exponent within the coefficient field, or nullopt when it leaves it.
inline std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent) {
  return rational_power(base, exponent);
}

inline std::optional<QuadraticSurd> exact_pow(const QuadraticSurd& base, const Rational& exponent) {
  if (base.is_zero()) {
    if (exponent.sign() <= 0) throw DomainError("exact_pow: zero to a non-positive power");
    return QuadraticSurd();
  }
  if (exponent.is_integer() && exponent.num().fits_slong_p())
    return pow(base, exponent.num().get_si());
  if (!base.is_rational()) return std::nullopt;
  const Rational b = base.rational_part();
  if (auto exact = rational_power(b, exponent)) return QuadraticSurd(*exact);
  // half-integer powers of a positive rational stay in Q(sqrt(b))
  if (exponent.den() == 2 && b.sign() > 0 && exponent.num().fits_slong_p())
    return pow(QuadraticSurd::sqrt(b), exponent.num().get_si());
  return std::nullopt;
}

inline std::optional<Real> exact_pow(const Real& base, const Rational& exponent) {
  if (base < 0 && !exponent.is_integer()) return std::nullopt;
  if (exponent.is_integer() && exponent.num().fits_slong_p())
    return Real(boost::multiprecision::pow(base, Real(exponent.num().get_si())));
  return Real(boost::multiprecision::pow(base, to_real(exponent)));
}

}  // namespace qeslab
