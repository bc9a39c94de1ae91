#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cycdenum/poly.hpp"

namespace cycdenum {

/// Quasi-polynomial [P_1, ..., P_f] of period f in t: the value at t is
/// P_i(t) with t = i (mod f), where t = 0 (mod f) selects P_f.
class QuasiPolynomial {
 public:
  QuasiPolynomial(unsigned period, std::vector<Poly> components);

  static QuasiPolynomial constant(const Rational& c) { return {1, {Poly::constant(c)}}; }
  static QuasiPolynomial zero() { return {1, {Poly()}}; }

  unsigned period() const noexcept { return period_; }
  const std::vector<Poly>& components() const noexcept { return components_; }
  /// P_i for 1 <= i <= period.
  const Poly& component(unsigned i) const { return components_.at(i - 1); }
  long degree() const;

  /// 1-based residue index selecting the component for t.
  static unsigned residue_index(std::uint64_t t, unsigned period) {
    return static_cast<unsigned>((t + period - 1) % period) + 1;
  }
  static unsigned residue_index(const Integer& t, unsigned period);

  Rational operator()(std::uint64_t t) const;
  Rational operator()(const Integer& t) const;

  /// Same function written with a period that is a multiple of period().
  QuasiPolynomial lifted(unsigned new_period) const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

  /// "[P_1, ..., P_f]" in the variable t.
  std::string to_string() const;

 private:
  unsigned period_;
  std::vector<Poly> components_;
};

Rational qp_eval(const QuasiPolynomial& qp, std::uint64_t t);
Rational qp_eval(const QuasiPolynomial& qp, const Integer& t);
QuasiPolynomial qp_add(const QuasiPolynomial& p, const QuasiPolynomial& q);
/// Sum of all waves as one quasi-polynomial of period lcm(f). Throws
/// std::length_error when that period exceeds max_period.
QuasiPolynomial qp_combine(const std::map<unsigned, QuasiPolynomial>& waves, std::uint64_t max_period = 1u << 20);

/// lcm of all wave periods, saturating at UINT64_MAX.
std::uint64_t combined_period(const std::map<unsigned, QuasiPolynomial>& waves);

}  // namespace cycdenum
