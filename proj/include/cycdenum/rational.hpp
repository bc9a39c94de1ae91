#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace cycdenum {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
/// Arbitrary precision integer.
using Integer = mpz_class;

/// "num/den" with den omitted when it is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "num", "num/den" or "-num/den". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Nearest floating value of q, usable for q far outside the double exponent
/// range of its numerator and denominator (e.g. B_k / k! for large k).
template <class Real>
Real to_floating(const Rational& q) {
  if (sgn(q) == 0) return Real(0);
  mpf_class x(q, 192);
  long exp = 0;
  double hi = mpf_get_d_2exp(&exp, x.get_mpf_t());
  // |hi| in [0.5, 1); for wider Real the bits below double precision are
  // recovered from the scaled remainder.
  if constexpr (sizeof(Real) > sizeof(double)) {
    mpf_class scaled(0, 192);
    if (exp >= 0) {
      mpf_div_2exp(scaled.get_mpf_t(), x.get_mpf_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
      mpf_mul_2exp(scaled.get_mpf_t(), x.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    mpf_class lo_part = scaled - hi;
    Real m = Real(hi) + Real(lo_part.get_d());
    return std::ldexp(m, static_cast<int>(exp));
  } else {
    return static_cast<Real>(std::ldexp(hi, static_cast<int>(exp)));
  }
}

}  // namespace cycdenum
