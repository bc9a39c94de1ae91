#include "cycdenum/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cycdenum {

namespace {

constexpr std::size_t kKaratsubaThreshold = 64;

using Coeffs = std::vector<Rational>;

void add_into(Coeffs& acc, std::span<const Rational> src, std::size_t offset) {
  if (acc.size() < src.size() + offset) acc.resize(src.size() + offset);
  for (std::size_t i = 0; i < src.size(); ++i) acc[i + offset] += src[i];
}

// Integer numerators over the lcm of the denominators.
Integer common_numerators(std::span<const Rational> a, std::vector<Integer>& nums) {
  Integer den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  nums.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_divexact(nums[i].get_mpz_t(), den.get_mpz_t(), a[i].get_den_mpz_t());
    nums[i] *= a[i].get_num();
  }
  return den;
}

// Convolution on integer numerators; each output is canonicalized once
// instead of once per term.
Coeffs schoolbook(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> na, nb;
  const Integer den = common_numerators(a, na) * common_numerators(b, nb);
  std::vector<Integer> acc(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (sgn(na[i]) == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  Coeffs out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    mpz_swap(out[k].get_num_mpz_t(), acc[k].get_mpz_t());
    out[k].get_den() = den;
    out[k].canonicalize();
  }
  return out;
}

Coeffs karatsuba(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) return schoolbook(a, b);
  std::size_t half = std::max(a.size(), b.size()) / 2;
  auto lo = [half](std::span<const Rational> v) { return v.first(std::min(half, v.size())); };
  auto hi = [half](std::span<const Rational> v) {
    return v.size() > half ? v.subspan(half) : std::span<const Rational>{};
  };
  auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);

  Coeffs z0 = karatsuba(a0, b0);
  Coeffs z2 = karatsuba(a1, b1);
  Coeffs sa(a0.begin(), a0.end());
  add_into(sa, a1, 0);
  Coeffs sb(b0.begin(), b0.end());
  add_into(sb, b1, 0);
  Coeffs z1 = karatsuba(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  Coeffs out(a.size() + b.size() - 1);
  add_into(out, z0, 0);
  add_into(out, z1, half);
  add_into(out, z2, 2 * half);
  out.resize(a.size() + b.size() - 1);
  return out;
}

}  // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::x_pow_minus_one(std::size_t n) {
  std::vector<Rational> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Poly& Poly::operator+=(const Poly& rhs) {
  add_into(coeffs_, rhs.coeffs_, 0);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = poly_mul(*this, rhs);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) { return poly_mul(lhs, rhs); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string Poly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << cycdenum::to_string(mag);
      continue;
    }
    if (mag.get_num() != 1) os << mag.get_num() << "*";
    os << var;
    if (k > 1) os << "^" << k;
    if (mag.get_den() != 1) os << "/" << mag.get_den();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

void PolyAccumulator::add_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::vector<Integer> na, nb;
  const Integer term_den = common_numerators(a.coeffs(), na) * common_numerators(b.coeffs(), nb);
  if (term_den != den_) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), term_den.get_mpz_t());
    if (l != den_) {
      Integer scale;
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), den_.get_mpz_t());
      for (auto& c : num_) c *= scale;
      den_ = l;
    }
    if (l != term_den) {
      Integer scale;
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), term_den.get_mpz_t());
      for (auto& c : na) c *= scale;
    }
  }
  if (num_.size() < na.size() + nb.size() - 1) num_.resize(na.size() + nb.size() - 1);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (sgn(na[i]) == 0) continue;
    for (std::size_t j = 0; j < nb.size(); ++j) {
      mpz_addmul(num_[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
}

Poly PolyAccumulator::value() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    out[k].get_num() = num_[k];
    out[k].get_den() = den_;
    out[k].canonicalize();
  }
  return Poly(std::move(out));
}

Poly poly_mul(const Poly& p, const Poly& q) { return Poly(karatsuba(p.coeffs(), q.coeffs())); }

DivRem poly_divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < q.degree()) return {Poly(), p};
  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dq = static_cast<std::size_t>(q.degree());
  std::vector<Rational> quot(rem.size() - dq);
  const Rational inv_lead = 1 / q.leading();
  const bool monic = q.leading() == 1;
  Rational tmp;
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (sgn(rem[k]) == 0) continue;
    Rational factor = monic ? rem[k] : Rational(rem[k] * inv_lead);
    quot[k - dq] = factor;
    for (std::size_t j = 0; j <= dq; ++j) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), q.coeffs()[j].get_mpq_t());
      rem[k - dq + j] -= tmp;
    }
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_rem(const Poly& p, const Poly& q) { return poly_divrem(p, q).rem; }

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly();
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(d));
}

}  // namespace cycdenum
