#include "cycdenum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/wave_float.hpp"

namespace cycdenum {

std::vector<Integer> dp_count(std::span<const unsigned> seq, std::uint64_t t_max) {
  std::vector<Integer> counts(t_max + 1);
  counts[0] = 1;
  for (unsigned a : seq) {
    if (a == 0) throw std::invalid_argument("dp_count: parts must be positive");
    for (std::uint64_t t = a; t <= t_max; ++t) counts[t] += counts[t - a];
  }
  return counts;
}

PrimrootSums primroot_sum_check(unsigned f, const std::function<std::complex<double>(std::complex<double>)>& F) {
  if (f == 0) throw std::invalid_argument("primroot_sum_check: f must be positive");
  const CycCtx& ctx = *CycCtx::get(f);
  const auto roots = roots_of_unity<double>(f);
  auto value = [&](std::complex<double> z) {
    auto v = F(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::overflow_error("primroot_sum_check: F is not finite at a root of unity of order " +
                                std::to_string(f));
    }
    return v;
  };
  PrimrootSums out{};
  for (unsigned j = 0; j < f; ++j) {
    const auto z = roots[j];
    const auto fz = value(z);
    if (std::gcd(j, f) == 1) out.lhs += fz;
    out.rhs += z * fz * poly_eval(ctx.cofactor(), z) * poly_eval(ctx.phi_deriv(), z);
  }
  out.rhs /= static_cast<double>(f);
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic modulo an odd p < 2^62.
class Montgomery {
 public:
  explicit Montgomery(u64 p) : p_(p) {
    u64 inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const u64 r = (0 - p) % p;
    r2_ = static_cast<u64>(static_cast<u128>(r) * r % p);
    one_ = to(1);
  }

  u64 modulus() const { return p_; }
  u64 one() const { return one_; }
  u64 reduce(u128 x) const {
    const u64 m = static_cast<u64>(x) * neg_inv_;
    const u64 t = static_cast<u64>((x + static_cast<u128>(m) * p_) >> 64);
    return t >= p_ ? t - p_ : t;
  }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 to(u64 a) const { return mul(a % p_, r2_); }

  u64 from_rational(const Rational& q) const {
    Integer pz;
    mpz_import(pz.get_mpz_t(), 1, -1, sizeof(p_), 0, 0, &p_);
    Integer den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), q.get_den_mpz_t(), pz.get_mpz_t()) == 0) {
      throw std::domain_error("verify_waves_against_dp: denominator divisible by the chosen prime");
    }
    Integer r = (q.get_num() * den_inv) % pz;
    if (r < 0) r += pz;
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, r.get_mpz_t());
    return to(v);
  }

 private:
  u64 p_;
  u64 neg_inv_;
  u64 r2_;
  u64 one_;
};

const std::vector<u64>& verification_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard lock(mu);
  while (primes.size() < count) {
    Integer start = Integer(1) << 62;
    start -= Integer(static_cast<unsigned long>(primes.size() + 1)) << 40;
    Integer p;
    mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
    u64 v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, p.get_mpz_t());
    primes.push_back(v);
  }
  return primes;
}

Integer to_integer(u64 v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return z;
}

/// Sum of waves whose periods share a small lcm, as one residue table.
struct ModGroup {
  unsigned period = 1;
  std::size_t width = 1;  // max degree + 1
  std::vector<u64> table;  // table[(i-1) * width + k]
};

constexpr unsigned kGroupPeriodCap = 4096;

std::vector<ModGroup> build_groups(const std::map<unsigned, QuasiPolynomial>& waves, const Montgomery& mont) {
  std::vector<const QuasiPolynomial*> order;
  for (const auto& [f, w] : waves) order.push_back(&w);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->period() > b->period(); });

  std::vector<ModGroup> groups;
  for (const QuasiPolynomial* w : order) {
    const std::size_t w_width = static_cast<std::size_t>(std::max<long>(w->degree(), 0)) + 1;
    ModGroup* target = nullptr;
    for (auto& g : groups) {
      if (std::lcm(g.period, w->period()) <= kGroupPeriodCap) {
        target = &g;
        break;
      }
    }
    if (!target) {
      groups.push_back({w->period(), w_width, std::vector<u64>(w->period() * w_width, 0)});
      target = &groups.back();
    }
    const unsigned new_period = std::lcm(target->period, w->period());
    const std::size_t new_width = std::max(target->width, w_width);
    if (new_period != target->period || new_width != target->width) {
      std::vector<u64> lifted(new_period * new_width, 0);
      for (unsigned i = 0; i < new_period; ++i) {
        for (std::size_t k = 0; k < target->width; ++k) {
          lifted[i * new_width + k] = target->table[(i % target->period) * target->width + k];
        }
      }
      target->period = new_period;
      target->width = new_width;
      target->table = std::move(lifted);
    }
    for (unsigned i = 0; i < target->period; ++i) {
      const Poly& comp = w->components()[i % w->period()];
      for (std::size_t k = 0; k < comp.size(); ++k) {
        u64& slot = target->table[i * target->width + k];
        slot = mont.add(slot, mont.from_rational(comp.coeffs()[k]));
      }
    }
  }
  return groups;
}

/// First t in [0, t_max] where the two sides differ modulo p.
std::optional<u64> scan_modulo(std::span<const unsigned> seq, const std::map<unsigned, QuasiPolynomial>& waves,
                               u64 t_max, u64 p) {
  const Montgomery mont(p);
  const auto groups = build_groups(waves, mont);

  // Streaming DP: stage j holds d(t; a_1..a_j) for the last a_j values of t.
  std::vector<std::vector<u64>> ring(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j) ring[j].assign(seq[j], 0);
  std::vector<unsigned> ring_pos(seq.size(), 0);
  std::vector<unsigned> residue(groups.size(), 0);

  u64 t_mont = 0;
  for (u64 t = 0; t <= t_max; ++t) {
    u64 dp = t == 0 ? mont.one() : 0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      u64& slot = ring[j][ring_pos[j]];
      dp = mont.add(dp, slot);
      slot = dp;
      if (++ring_pos[j] == seq[j]) ring_pos[j] = 0;
    }

    u64 total = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const ModGroup& grp = groups[g];
      const unsigned r = residue[g];
      const unsigned idx = r == 0 ? grp.period - 1 : r - 1;
      const u64* row = &grp.table[idx * grp.width];
      u64 acc = row[grp.width - 1];
      for (std::size_t k = grp.width - 1; k-- > 0;) acc = mont.add(mont.mul(acc, t_mont), row[k]);
      total = mont.add(total, acc);
      if (++residue[g] == grp.period) residue[g] = 0;
    }
    if (total != dp) return t;
    t_mont = mont.add(t_mont, mont.one());
  }
  return std::nullopt;
}

}  // namespace

OracleReport verify_waves_against_dp(std::span<const unsigned> seq, const std::map<unsigned, QuasiPolynomial>& waves,
                                     std::uint64_t t_max) {
  if (t_max >= (u64(1) << 61)) throw std::invalid_argument("verify_waves_against_dp: t_max too large");
  for (unsigned a : seq) {
    if (a == 0) throw std::invalid_argument("verify_waves_against_dp: parts must be positive");
  }

  // |D (W(t) - d(t))| <= D (sum_f max_i sum_k |c_ik| T^k + (T+1)^N)
  const Integer T = to_integer(t_max);
  Integer denom_lcm = 1;
  Rational wave_bound = 0;
  for (const auto& [f, w] : waves) {
    Rational worst = 0;
    for (const auto& comp : w.components()) {
      Rational s = 0;
      Integer tp = 1;
      for (const auto& c : comp.coeffs()) {
        s += abs(c) * tp;
        tp *= T;
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
      }
      if (s > worst) worst = s;
    }
    wave_bound += worst;
  }
  Integer dp_bound;
  Integer t1 = T + 1;
  mpz_pow_ui(dp_bound.get_mpz_t(), t1.get_mpz_t(), seq.size());
  Rational bound = Rational(denom_lcm) * (wave_bound + Rational(dp_bound));
  const std::size_t bits = mpz_sizeinbase(Integer(bound.get_num() / bound.get_den() + 1).get_mpz_t(), 2);
  const std::size_t count = bits / 61 + 1;

  OracleReport report;
  report.moduli_used = count;
  const auto& primes = verification_primes(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (auto t = scan_modulo(seq, waves, t_max, primes[i])) {
      report.mismatch = OracleMismatch{*t};
      report.points_checked = *t;
      return report;
    }
  }
  report.points_checked = t_max + 1;
  return report;
}

}  // namespace cycdenum
