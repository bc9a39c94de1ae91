#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "cycdenum/poly.hpp"

namespace cycdenum {

/// The f-th cyclotomic polynomial. Memoized process-wide; throws
/// std::invalid_argument for f == 0.
const Poly& cyclotomic_poly(unsigned f);

/// All positive divisors of n in ascending order.
std::vector<unsigned> divisors(unsigned n);

/// Union of the divisors of every entry, ascending (always contains 1).
std::vector<unsigned> divisor_union(std::span<const unsigned> seq);

unsigned euler_totient(unsigned n);

/// Representative of p in Q[x]/<x^f - 1> of degree < f.
Poly mod_xf_reduce(unsigned f, const Poly& p);

/// Precomputed data for one modulus f: Phi_f, its cofactor (x^f-1)/Phi_f,
/// Phi_f', and a lazily filled table of inverses of (1 - x^a).
class CycCtx {
 public:
  explicit CycCtx(unsigned f);

  /// Shared context for f; contexts are built once per process.
  static std::shared_ptr<const CycCtx> get(unsigned f);

  unsigned f() const noexcept { return f_; }
  unsigned totient() const noexcept { return totient_; }
  const Poly& phi() const noexcept { return phi_; }
  const Poly& cofactor() const noexcept { return cofactor_; }
  const Poly& phi_deriv() const noexcept { return phi_deriv_; }
  /// cofactor * phi_deriv reduced mod x^f - 1.
  const Poly& cofactor_times_deriv() const noexcept { return cofactor_deriv_; }

  /// Standard form: reduce mod x^f - 1, then mod Phi_f. Degree < totient.
  Poly standard_form(const Poly& p) const;

  /// Standard form of -(1/f) x^a theta_f'(x^a), the inverse of (1 - x^a)
  /// modulo Phi_f. Throws std::domain_error when f divides a.
  const Poly& inverse_one_minus(std::int64_t a) const;

 private:
  unsigned f_;
  unsigned totient_;
  Poly phi_;
  Poly cofactor_;
  Poly phi_deriv_;
  Poly cofactor_deriv_;
  mutable std::mutex inv_mu_;
  mutable std::unordered_map<unsigned, Poly> inv_cache_;
};

inline Poly standard_form(const CycCtx& ctx, const Poly& p) { return ctx.standard_form(p); }
inline const Poly& inverse_one_minus(const CycCtx& ctx, std::int64_t a) { return ctx.inverse_one_minus(a); }

/// Element of the field Q[x]/<Phi_f>, held in standard form.
class CycElem {
 public:
  CycElem(const CycCtx& ctx, const Poly& p) : ctx_(&ctx), rep_(ctx.standard_form(p)) {}

  static CycElem zero(const CycCtx& ctx) { return CycElem(ctx, Poly(), Reduced{}); }
  static CycElem one(const CycCtx& ctx) { return CycElem(ctx, Poly::constant(1), Reduced{}); }

  const CycCtx& ctx() const noexcept { return *ctx_; }
  const Poly& rep() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  CycElem& operator+=(const CycElem& rhs) {
    rep_ += rhs.rep_;
    return *this;
  }
  CycElem& operator-=(const CycElem& rhs) {
    rep_ -= rhs.rep_;
    return *this;
  }
  CycElem& operator*=(const CycElem& rhs) {
    rep_ = ctx_->standard_form(poly_mul(rep_, rhs.rep_));
    return *this;
  }
  CycElem& operator*=(const Rational& c) {
    rep_ *= c;
    return *this;
  }

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rational& c) { return a *= c; }
  friend CycElem operator*(const Rational& c, CycElem a) { return a *= c; }
  CycElem operator-() const { return CycElem(*ctx_, -rep_, Reduced{}); }

  friend bool operator==(const CycElem& a, const CycElem& b) {
    return a.ctx_->f() == b.ctx_->f() && a.rep_ == b.rep_;
  }

 private:
  struct Reduced {};
  CycElem(const CycCtx& ctx, Poly p, Reduced) : ctx_(&ctx), rep_(std::move(p)) {}

  const CycCtx* ctx_;
  Poly rep_;
};

}  // namespace cycdenum
