#include "cycdenum/cyclotomic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace cycdenum {

namespace {

std::mutex g_phi_mu;
std::unordered_map<unsigned, std::unique_ptr<Poly>> g_phi_table;

std::mutex g_ctx_mu;
std::unordered_map<unsigned, std::shared_ptr<const CycCtx>> g_ctx_table;

}  // namespace

const Poly& cyclotomic_poly(unsigned f) {
  if (f == 0) throw std::invalid_argument("cyclotomic_poly: f must be positive");
  {
    std::lock_guard lock(g_phi_mu);
    if (auto it = g_phi_table.find(f); it != g_phi_table.end()) return *it->second;
  }
  // Phi_f = (x^f - 1) / prod_{d | f, d < f} Phi_d
  Poly denom = Poly::constant(1);
  for (unsigned d : divisors(f)) {
    if (d < f) denom = poly_mul(denom, cyclotomic_poly(d));
  }
  auto qr = poly_divrem(Poly::x_pow_minus_one(f), denom);
  if (!qr.rem.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division for f=" + std::to_string(f));

  std::lock_guard lock(g_phi_mu);
  auto [it, inserted] = g_phi_table.try_emplace(f, std::make_unique<Poly>(std::move(qr.quot)));
  return *it->second;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; static_cast<unsigned long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<unsigned> divisor_union(std::span<const unsigned> seq) {
  std::set<unsigned> all{1};
  for (unsigned a : seq) {
    if (a == 0) continue;
    for (unsigned d : divisors(a)) all.insert(d);
  }
  return {all.begin(), all.end()};
}

unsigned euler_totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; static_cast<unsigned long>(p) * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Poly mod_xf_reduce(unsigned f, const Poly& p) {
  if (f == 0) throw std::invalid_argument("mod_xf_reduce: f must be positive");
  if (p.size() <= f) return p;
  std::vector<Rational> folded(f);
  auto c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) folded[k % f] += c[k];
  return Poly(std::move(folded));
}

CycCtx::CycCtx(unsigned f) : f_(f) {
  if (f == 0) throw std::invalid_argument("CycCtx: f must be positive");
  phi_ = cyclotomic_poly(f);
  totient_ = static_cast<unsigned>(phi_.degree());
  auto qr = poly_divrem(Poly::x_pow_minus_one(f), phi_);
  cofactor_ = std::move(qr.quot);
  phi_deriv_ = poly_derivative(phi_);
  cofactor_deriv_ = mod_xf_reduce(f, cofactor_ * phi_deriv_);
}

std::shared_ptr<const CycCtx> CycCtx::get(unsigned f) {
  {
    std::lock_guard lock(g_ctx_mu);
    if (auto it = g_ctx_table.find(f); it != g_ctx_table.end()) return it->second;
  }
  auto ctx = std::make_shared<const CycCtx>(f);
  std::lock_guard lock(g_ctx_mu);
  auto [it, inserted] = g_ctx_table.try_emplace(f, std::move(ctx));
  return it->second;
}

Poly CycCtx::standard_form(const Poly& p) const {
  if (p.degree() < static_cast<long>(totient_)) return p;
  return poly_rem(mod_xf_reduce(f_, p), phi_);
}

const Poly& CycCtx::inverse_one_minus(std::int64_t a) const {
  const std::int64_t fi = f_;
  const auto r = static_cast<unsigned>(((a % fi) + fi) % fi);
  if (r == 0) {
    throw std::domain_error("inverse_one_minus: " + std::to_string(f_) + " divides " + std::to_string(a) +
                            ", so 1 - x^a vanishes mod Phi_f");
  }
  std::lock_guard lock(inv_mu_);
  if (auto it = inv_cache_.find(r); it != inv_cache_.end()) return it->second;

  // x^a theta_f'(x^a) = sum_{i=1}^{f-1} i x^{a i}; fold exponents mod f.
  std::vector<Rational> v(f_);
  const Rational scale(-1, f_);
  for (unsigned i = 1; i < f_; ++i) {
    v[(static_cast<std::uint64_t>(r) * i) % f_] += Rational(i) * scale;
  }
  auto [it, inserted] = inv_cache_.emplace(r, poly_rem(Poly(std::move(v)), phi_));
  return it->second;
}

}  // namespace cycdenum
