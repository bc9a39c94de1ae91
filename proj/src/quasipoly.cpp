#include "cycdenum/quasipoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycdenum {

QuasiPolynomial::QuasiPolynomial(unsigned period, std::vector<Poly> components)
    : period_(period), components_(std::move(components)) {
  if (period_ == 0) throw std::invalid_argument("QuasiPolynomial: period must be positive");
  if (components_.size() != period_) {
    throw std::invalid_argument("QuasiPolynomial: expected " + std::to_string(period_) + " components, got " +
                                std::to_string(components_.size()));
  }
}

long QuasiPolynomial::degree() const {
  long d = -1;
  for (const auto& p : components_) d = std::max(d, p.degree());
  return d;
}

unsigned QuasiPolynomial::residue_index(const Integer& t, unsigned period) {
  Integer r = t % period;
  if (r < 0) r += period;
  unsigned ri = static_cast<unsigned>(r.get_ui());
  return ri == 0 ? period : ri;
}

Rational QuasiPolynomial::operator()(std::uint64_t t) const {
  const Poly& p = component(residue_index(t, period_));
  Integer tz;
  mpz_import(tz.get_mpz_t(), 1, -1, sizeof(t), 0, 0, &t);
  return poly_eval(p, Rational(tz));
}

Rational QuasiPolynomial::operator()(const Integer& t) const {
  return poly_eval(component(residue_index(t, period_)), Rational(t));
}

QuasiPolynomial QuasiPolynomial::lifted(unsigned new_period) const {
  if (new_period == 0 || new_period % period_ != 0) {
    throw std::invalid_argument("QuasiPolynomial::lifted: " + std::to_string(new_period) +
                                " is not a multiple of " + std::to_string(period_));
  }
  std::vector<Poly> out;
  out.reserve(new_period);
  for (unsigned j = 1; j <= new_period; ++j) out.push_back(components_[(j - 1) % period_]);
  return {new_period, std::move(out)};
}

std::string QuasiPolynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ", ";
    os << components_[i].to_string("t");
  }
  os << "]";
  return os.str();
}

Rational qp_eval(const QuasiPolynomial& qp, std::uint64_t t) { return qp(t); }
Rational qp_eval(const QuasiPolynomial& qp, const Integer& t) { return qp(t); }

QuasiPolynomial qp_add(const QuasiPolynomial& p, const QuasiPolynomial& q) {
  const unsigned period = std::lcm(p.period(), q.period());
  auto lp = p.lifted(period);
  const auto lq = q.lifted(period);
  std::vector<Poly> out = lp.components();
  for (unsigned i = 0; i < period; ++i) out[i] += lq.components()[i];
  return {period, std::move(out)};
}

std::uint64_t combined_period(const std::map<unsigned, QuasiPolynomial>& waves) {
  std::uint64_t l = 1;
  for (const auto& [f, w] : waves) {
    const std::uint64_t g = std::gcd(l, static_cast<std::uint64_t>(w.period()));
    const std::uint64_t m = w.period() / g;
    if (l > std::numeric_limits<std::uint64_t>::max() / m) return std::numeric_limits<std::uint64_t>::max();
    l *= m;
  }
  return l;
}

QuasiPolynomial qp_combine(const std::map<unsigned, QuasiPolynomial>& waves, std::uint64_t max_period) {
  const std::uint64_t period = combined_period(waves);
  if (period > max_period || period > std::numeric_limits<unsigned>::max()) {
    throw std::length_error("qp_combine: combined period " + std::to_string(period) + " exceeds limit " +
                            std::to_string(max_period));
  }
  QuasiPolynomial acc = QuasiPolynomial::zero();
  for (const auto& [f, w] : waves) acc = qp_add(acc, w);
  return acc;
}

}  // namespace cycdenum
