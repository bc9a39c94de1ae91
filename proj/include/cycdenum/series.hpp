#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/rational.hpp"

namespace cycdenum {

/// Coefficient-ring glue for TruncSeries. A ring value doubles as the
/// prototype that carries any context (e.g. the modulus of a CycElem).
///
/// Acc is a sum-of-products accumulator: acc_add_mul collects a*b and
/// acc_finish turns the sum back into a ring element, so rings with an
/// expensive reduction reduce once per sum rather than once per product.
template <class C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero(const Rational&) { return 0; }
  static Rational one(const Rational&) { return 1; }
  static Rational from_rational(const Rational&, const Rational& q) { return q; }
  static Rational scale(const Rational& x, const Rational& q) { return x * q; }
  static bool is_one(const Rational& x) { return x == 1; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }

  using Acc = Rational;
  static Acc acc_zero(const Rational&) { return 0; }
  static void acc_add_mul(Acc& acc, const Rational& a, const Rational& b) { acc += a * b; }
  static Rational acc_finish(const Rational&, Acc acc) { return acc; }
};

template <>
struct RingTraits<CycElem> {
  static CycElem zero(const CycElem& p) { return CycElem::zero(p.ctx()); }
  static CycElem one(const CycElem& p) { return CycElem::one(p.ctx()); }
  static CycElem from_rational(const CycElem& p, const Rational& q) { return CycElem(p.ctx(), Poly::constant(q)); }
  static CycElem scale(const CycElem& x, const Rational& q) { return x * q; }
  static bool is_one(const CycElem& x) { return x == one(x); }
  static bool is_zero(const CycElem& x) { return x.is_zero(); }

  using Acc = PolyAccumulator;
  static Acc acc_zero(const CycElem&) { return {}; }
  static void acc_add_mul(Acc& acc, const CycElem& a, const CycElem& b) { acc.add_product(a.rep(), b.rep()); }
  static CycElem acc_finish(const CycElem& proto, const Acc& acc) { return CycElem(proto.ctx(), acc.value()); }
};

template <class Real>
struct RingTraits<std::complex<Real>> {
  using C = std::complex<Real>;
  static C zero(const C&) { return C(0); }
  static C one(const C&) { return C(1); }
  static C from_rational(const C&, const Rational& q) { return C(to_floating<Real>(q)); }
  static C scale(const C& x, const Rational& q) { return x * to_floating<Real>(q); }
  static bool is_one(const C& x) { return x == C(1); }
  static bool is_zero(const C& x) { return x == C(0); }

  using Acc = C;
  static Acc acc_zero(const C&) { return C(0); }
  static void acc_add_mul(Acc& acc, const C& a, const C& b) { acc += a * b; }
  static C acc_finish(const C&, Acc acc) { return acc; }
};

/// Truncated power series sum_{k < order} c_k s^k over the ring C.
template <class C>
class TruncSeries {
 public:
  TruncSeries(std::size_t order, const C& zero) : coeffs_(order, zero) {
    if (order == 0) throw std::invalid_argument("TruncSeries: order must be positive");
  }
  explicit TruncSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: order must be positive");
  }

  std::size_t order() const noexcept { return coeffs_.size(); }
  const C& operator[](std::size_t k) const { return coeffs_[k]; }
  C& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const C> coeffs() const noexcept { return coeffs_; }

  /// Drops every term of degree >= order.
  TruncSeries truncated(std::size_t order) const {
    if (order == 0 || order > coeffs_.size()) throw std::invalid_argument("TruncSeries::truncated: bad order");
    return TruncSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)));
  }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  void require_same_order(const TruncSeries& rhs) const {
    if (rhs.order() != order()) {
      throw std::invalid_argument("TruncSeries: order mismatch (" + std::to_string(order()) + " vs " +
                                  std::to_string(rhs.order()) + ")");
    }
  }

 private:
  std::vector<C> coeffs_;
};

template <class C>
TruncSeries<C> ts_mul(const TruncSeries<C>& p, const TruncSeries<C>& q) {
  using R = RingTraits<C>;
  p.require_same_order(q);
  const std::size_t d = p.order();
  TruncSeries<C> out(d, R::zero(p[0]));
  for (std::size_t k = 0; k < d; ++k) {
    auto acc = R::acc_zero(p[0]);
    for (std::size_t i = 0; i <= k; ++i) {
      if (R::is_zero(p[i]) || R::is_zero(q[k - i])) continue;
      R::acc_add_mul(acc, p[i], q[k - i]);
    }
    out[k] = R::acc_finish(p[0], std::move(acc));
  }
  return out;
}

template <class C>
TruncSeries<C> operator*(const TruncSeries<C>& p, const TruncSeries<C>& q) {
  return ts_mul(p, q);
}

/// ln g mod s^d for g(0) = 1, from k H_k = k g_k - sum_{j<k} j H_j g_{k-j}.
template <class C>
TruncSeries<C> ts_log(const TruncSeries<C>& g) {
  using R = RingTraits<C>;
  if (!R::is_one(g[0])) throw std::domain_error("ts_log: constant term must be 1");
  const std::size_t d = g.order();
  TruncSeries<C> h(d, R::zero(g[0]));
  std::vector<C> jh(d, R::zero(g[0]));  // j H_j
  for (std::size_t k = 1; k < d; ++k) {
    auto acc = R::acc_zero(g[0]);
    for (std::size_t j = 1; j < k; ++j) {
      if (R::is_zero(jh[j]) || R::is_zero(g[k - j])) continue;
      R::acc_add_mul(acc, jh[j], g[k - j]);
    }
    const C sum = R::acc_finish(g[0], std::move(acc));
    jh[k] = R::scale(g[k], Rational(static_cast<long>(k))) - sum;
    h[k] = R::scale(jh[k], Rational(1, static_cast<unsigned long>(k)));
  }
  return h;
}

/// e^h mod s^d for h(0) = 0, from k F_k = sum_{j=1}^{k} j h_j F_{k-j}.
template <class C>
TruncSeries<C> ts_exp(const TruncSeries<C>& h) {
  using R = RingTraits<C>;
  if (!R::is_zero(h[0])) throw std::domain_error("ts_exp: constant term must be 0");
  const std::size_t d = h.order();
  TruncSeries<C> f(d, R::zero(h[0]));
  f[0] = R::one(h[0]);
  std::vector<C> jh;
  jh.reserve(d);
  jh.push_back(R::zero(h[0]));
  for (std::size_t j = 1; j < d; ++j) jh.push_back(R::scale(h[j], Rational(static_cast<long>(j))));
  for (std::size_t k = 1; k < d; ++k) {
    auto acc = R::acc_zero(h[0]);
    for (std::size_t j = 1; j <= k; ++j) {
      if (R::is_zero(jh[j])) continue;
      R::acc_add_mul(acc, jh[j], f[k - j]);
    }
    f[k] = R::scale(R::acc_finish(h[0], std::move(acc)), Rational(1, static_cast<unsigned long>(k)));
  }
  return f;
}

/// p(b s): coefficient k multiplied by b^k.
template <class C>
TruncSeries<C> ts_scale_arg(const TruncSeries<C>& p, const Rational& b) {
  TruncSeries<C> out = p;
  Rational pw = 1;
  for (std::size_t k = 1; k < p.order(); ++k) {
    pw *= b;
    out[k] = RingTraits<C>::scale(p[k], pw);
  }
  return out;
}

template <class C>
TruncSeries<C> ts_scale_arg(const TruncSeries<C>& p, std::int64_t b) {
  return ts_scale_arg(p, Rational(static_cast<long>(b)));
}

/// Power sums sum_{b in B} (sigma b)^k for k < order.
std::vector<Rational> scaled_power_sums(std::span<const std::int64_t> multiset, std::size_t order,
                                        const Rational& sigma = 1);

/// sum_{b in B} h(sigma b s): coefficient k times sum_b (sigma b)^k. Requires h(0) = 0.
template <class C>
TruncSeries<C> ts_sum_scaled(const TruncSeries<C>& h, std::span<const std::int64_t> multiset,
                             const Rational& sigma = 1) {
  using R = RingTraits<C>;
  if (!R::is_zero(h[0])) throw std::domain_error("ts_sum_scaled: constant term must be 0");
  TruncSeries<C> out(h.order(), R::zero(h[0]));
  if (multiset.empty()) return out;
  auto sums = scaled_power_sums(multiset, h.order(), sigma);
  for (std::size_t k = 1; k < h.order(); ++k) out[k] = R::scale(h[k], sums[k]);
  return out;
}

/// Bernoulli numbers B_0..B_{n-1}, with B_1 = -1/2 (generating function s/(e^s - 1)).
std::vector<Rational> bernoulli_numbers(std::size_t n);

/// Truncation of s/(e^s - 1) = sum B_k s^k / k!.
TruncSeries<Rational> todd_series(std::size_t order);

/// ln(s/(e^s - 1)) mod s^order.
TruncSeries<Rational> h_series(std::size_t order);

/// ln(1 / (1 - y (e^s - 1))) mod s^order.
template <class C>
TruncSeries<C> h_y_series(const C& y, std::size_t order) {
  using R = RingTraits<C>;
  TruncSeries<C> g(order, R::zero(y));
  g[0] = R::one(y);
  Rational inv_fact = 1;
  for (std::size_t i = 1; i < order; ++i) {
    inv_fact /= static_cast<unsigned long>(i);
    g[i] = -R::scale(y, inv_fact);
  }
  return -ts_log(g);
}

/// Lifts a rational series into the ring of `proto`.
template <class C>
TruncSeries<C> lift_series(const TruncSeries<Rational>& p, const C& proto) {
  std::vector<C> out;
  out.reserve(p.order());
  for (const auto& c : p.coeffs()) out.push_back(RingTraits<C>::from_rational(proto, c));
  return TruncSeries<C>(std::move(out));
}

}  // namespace cycdenum
