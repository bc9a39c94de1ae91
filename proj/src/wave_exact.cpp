#include "cycdenum/wave_exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "cycdenum/gtodd.hpp"
#include "parallel.hpp"

namespace cycdenum {

namespace {

Rational wave_scale(std::size_t n, std::size_t m, const Integer& prod_div) {
  // (-1)^{n+m+1} / (m! prod_{f|a_i} a_i)
  Rational r(1, 1);
  r /= Rational(factorial(static_cast<unsigned>(m)) * prod_div);
  if ((n + m + 1) % 2 == 1) r = -r;
  return r;
}

CycElem power(CycElem base, std::size_t e) {
  CycElem acc = CycElem::one(base.ctx());
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

}  // namespace

WaveContext::WaveContext(std::span<const unsigned> s, unsigned modulus) : seq(s.begin(), s.end()), f(modulus) {
  if (f == 0) throw std::invalid_argument("WaveContext: f must be positive");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] % f == 0) {
      div_idx.push_back(i);
      prod_div *= seq[i];
    } else {
      nondiv_idx.push_back(i);
    }
  }
}

QuasiPolynomial wave_one(std::span<const unsigned> seq) {
  validate_sequence(seq);
  const std::size_t n = seq.size();
  GtdSpec<Rational> spec;
  spec.plain.assign(seq.begin(), seq.end());
  spec.order = n;
  const auto todd = gtodd_sequence(spec, Rational(1));

  Integer prod = 1;
  for (unsigned a : seq) prod *= a;
  std::vector<Rational> coeffs(n);
  for (std::size_t m = 0; m < n; ++m) coeffs[m] = wave_scale(n, m, prod) * todd[n - 1 - m];
  return QuasiPolynomial(1, {Poly(std::move(coeffs))});
}

WaveTrace wave_f_trace(std::span<const unsigned> seq, unsigned f) {
  validate_sequence(seq);
  if (f < 2) throw std::invalid_argument("wave_f: f must be at least 2 (use wave_one)");
  WaveContext wc(seq, f);
  const std::size_t n = wc.n_div();
  if (n == 0) throw std::invalid_argument("wave_f: " + std::to_string(f) + " divides no entry of a");

  const auto ctx = CycCtx::get(f);
  const CycElem one = CycElem::one(*ctx);

  GtdSpec<CycElem> spec;
  spec.order = n;
  for (auto i : wc.div_idx) spec.plain.push_back(seq[i]);

  // Entries with equal residue share v = 1/(1 - x^a) and y = v - 1.
  std::map<unsigned, std::vector<std::int64_t>> by_residue;
  for (auto i : wc.nondiv_idx) by_residue[seq[i] % f].push_back(seq[i]);

  CycElem v_product = one;
  for (const auto& [r, members] : by_residue) {
    CycElem v(*ctx, ctx->inverse_one_minus(r));
    spec.mixed.emplace_back(members, v - one);
    v_product *= power(v, members.size());
  }

  WaveTrace trace{gtodd_sequence(spec, one), v_product.rep(), {}, {}, QuasiPolynomial::zero()};

  std::vector<std::vector<Rational>> p_coeffs(f, std::vector<Rational>(n));
  for (std::size_t m = 0; m < n; ++m) {
    const CycElem mm = trace.todd[n - 1 - m] * v_product;
    trace.m_polys.push_back(mm.rep());
    const Poly reduced = mod_xf_reduce(f, mm.rep() * ctx->cofactor_times_deriv());
    std::vector<Rational> row(f);
    for (unsigned i = 0; i < f; ++i) row[i] = reduced[i];

    const Rational scale = wave_scale(n, m, wc.prod_div);
    for (unsigned i = 0; i < f; ++i) p_coeffs[i][m] = scale * row[i];
    trace.coefficient_table.push_back(std::move(row));
  }

  std::vector<Poly> components;
  components.reserve(f);
  for (auto& c : p_coeffs) components.emplace_back(std::move(c));
  trace.wave = QuasiPolynomial(f, std::move(components));
  return trace;
}

QuasiPolynomial wave_f(std::span<const unsigned> seq, unsigned f) { return wave_f_trace(seq, f).wave; }

std::map<unsigned, QuasiPolynomial> all_waves(std::span<const unsigned> seq, const WaveOptions& options) {
  validate_sequence(seq);
  const auto moduli = divisor_union(seq);
  std::vector<std::optional<QuasiPolynomial>> results(moduli.size());
  detail::parallel_for(moduli.size(), options.threads, [&](std::size_t k) {
    options.deadline.check();
    const unsigned f = moduli[k];
    results[k] = f == 1 ? wave_one(seq) : wave_f(seq, f);
  });
  std::map<unsigned, QuasiPolynomial> out;
  for (std::size_t k = 0; k < moduli.size(); ++k) out.emplace(moduli[k], std::move(*results[k]));
  return out;
}

Integer evaluate_waves(const std::map<unsigned, QuasiPolynomial>& waves, const Integer& t) {
  Rational total = 0;
  for (const auto& [f, w] : waves) total += w(t);
  if (total.get_den() != 1) {
    throw std::logic_error("sum of waves at t=" + t.get_str() + " is not an integer: " + to_string(total));
  }
  return total.get_num();
}

}  // namespace cycdenum
