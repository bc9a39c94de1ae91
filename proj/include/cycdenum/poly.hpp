#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cycdenum/rational.hpp"

namespace cycdenum {

/// Dense univariate polynomial over the rationals. Coefficient k belongs to
/// x^k. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  /// x^n - 1
  static Poly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^k (zero beyond the degree).
  Rational operator[](std::size_t k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& lhs, const Poly& rhs) = default;

  /// Human readable, descending powers, e.g. "t^2/36 + 5*t/18 + 127/216".
  std::string to_string(std::string_view var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

Poly poly_mul(const Poly& p, const Poly& q);

struct DivRem {
  Poly quot;
  Poly rem;
};

/// Exact long division. Throws std::domain_error when q is zero.
DivRem poly_divrem(const Poly& p, const Poly& q);
Poly poly_rem(const Poly& p, const Poly& q);

Poly poly_derivative(const Poly& p);

/// Running sum of products a*b kept as integer numerators over one common
/// denominator; coefficients are reduced only when value() is read.
class PolyAccumulator {
 public:
  void add_product(const Poly& a, const Poly& b);
  Poly value() const;

 private:
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// Horner evaluation in the ring of v; `lift` maps a Rational coefficient
/// into that ring.
template <class R, class Lift>
R poly_eval(const Poly& p, const R& v, Lift lift) {
  auto c = p.coeffs();
  if (c.empty()) return lift(Rational(0));
  R acc = lift(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * v + lift(c[k]);
  }
  return acc;
}

inline Rational poly_eval(const Poly& p, const Rational& v) {
  return poly_eval(p, v, [](const Rational& c) { return c; });
}

template <class Real>
std::complex<Real> poly_eval(const Poly& p, const std::complex<Real>& v) {
  return poly_eval(p, v, [](const Rational& c) { return std::complex<Real>(to_floating<Real>(c)); });
}

}  // namespace cycdenum
