#include "cycdenum/wave_float.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "cycdenum/gtodd.hpp"
#include "parallel.hpp"

namespace cycdenum {

template <class Real>
std::vector<std::vector<Real>> FloatWave<Real>::real_components() const {
  std::vector<std::vector<Real>> out;
  out.reserve(components.size());
  for (const auto& comp : components) {
    std::vector<Real> row;
    row.reserve(comp.size());
    for (const auto& c : comp) row.push_back(c.real());
    out.push_back(std::move(row));
  }
  return out;
}

template <class Real>
Real FloatWave<Real>::operator()(Real t, std::uint64_t residue_t) const {
  const auto& comp = components.at(QuasiPolynomial::residue_index(residue_t, period) - 1);
  Real acc = 0;
  for (std::size_t k = comp.size(); k-- > 0;) acc = acc * t + comp[k].real();
  return acc;
}

template <class Real>
Real FloatWave<Real>::operator()(std::uint64_t t) const {
  return (*this)(static_cast<Real>(t), t);
}

template <class Real>
std::vector<std::complex<Real>> roots_of_unity(unsigned f) {
  std::vector<std::complex<Real>> out(f);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  for (unsigned k = 0; k < f; ++k) {
    const Real angle = two_pi * static_cast<Real>(k) / static_cast<Real>(f);
    out[k] = std::polar(Real(1), angle);
  }
  if (f > 0) out[0] = 1;
  return out;
}

template <class Real>
FloatWave<Real> float_wave_f(std::span<const unsigned> seq, unsigned f) {
  using C = std::complex<Real>;
  validate_sequence(seq);
  WaveContext wc(seq, f);
  const std::size_t n = wc.n_div();
  if (n == 0) throw std::invalid_argument("float_wave_f: " + std::to_string(f) + " divides no entry of a");

  const auto eta = roots_of_unity<Real>(f);
  std::vector<C> inv_one_minus(f, C(0));
  for (unsigned k = 1; k < f; ++k) inv_one_minus[k] = C(1) / (C(1) - eta[k]);

  // F(s / beta) keeps sum (b / beta)^k bounded by the multiset size.
  const unsigned beta = *std::max_element(seq.begin(), seq.end());
  const Rational sigma(1, beta);
  std::vector<Real> factor(n);
  for (std::size_t m = 0; m < n; ++m) {
    Integer beta_pow;
    mpz_ui_pow_ui(beta_pow.get_mpz_t(), beta, static_cast<unsigned long>(n - 1 - m));
    Rational r(beta_pow, factorial(static_cast<unsigned>(m)) * wc.prod_div);
    r.canonicalize();
    if ((n + m + 1) % 2 == 1) r = -r;
    factor[m] = to_floating<Real>(r);
  }

  std::vector<std::int64_t> plain;
  for (auto i : wc.div_idx) plain.push_back(seq[i]);

  // sums[m][i-1] = sum_j eta^{-i j} A_{n-1-m}(j) / prod (1 - eta^{j a})
  std::vector<std::vector<C>> sums(n, std::vector<C>(f, C(0)));
  for (unsigned j = 1; j <= f; ++j) {
    if (std::gcd(j, f) != 1) continue;
    GtdSpec<C> spec;
    spec.order = n;
    spec.plain = plain;
    spec.arg_scale = sigma;

    std::vector<std::vector<std::int64_t>> by_residue(f);
    C inv_prod(1);
    for (auto i : wc.nondiv_idx) {
      const auto r = static_cast<unsigned>((static_cast<std::uint64_t>(j) * seq[i]) % f);
      by_residue[r].push_back(seq[i]);
      inv_prod *= inv_one_minus[r];
    }
    for (unsigned r = 1; r < f; ++r) {
      if (!by_residue[r].empty()) spec.mixed.emplace_back(std::move(by_residue[r]), eta[r] * inv_one_minus[r]);
    }

    const auto a_series = gtodd_sequence(spec, C(1));
    for (std::size_t m = 0; m < n; ++m) {
      const C w = a_series[n - 1 - m] * inv_prod;
      for (unsigned i = 1; i <= f; ++i) {
        const unsigned idx = static_cast<unsigned>((f - (static_cast<std::uint64_t>(i) * j) % f) % f);
        sums[m][i - 1] += eta[idx] * w;
      }
    }
  }

  FloatWave<Real> wave;
  wave.period = f;
  wave.components.assign(f, std::vector<C>(n));
  for (unsigned i = 0; i < f; ++i) {
    for (std::size_t m = 0; m < n; ++m) {
      const C c = factor[m] * sums[m][i];
      wave.components[i][m] = c;
      wave.max_imag = std::max(wave.max_imag, std::abs(c.imag()));
    }
  }
  return wave;
}

template <class Real>
std::map<unsigned, FloatWave<Real>> float_all_waves(std::span<const unsigned> seq, const WaveOptions& options) {
  validate_sequence(seq);
  const auto moduli = divisor_union(seq);
  std::vector<std::optional<FloatWave<Real>>> results(moduli.size());
  detail::parallel_for(moduli.size(), options.threads, [&](std::size_t k) {
    options.deadline.check();
    results[k] = float_wave_f<Real>(seq, moduli[k]);
  });
  std::map<unsigned, FloatWave<Real>> out;
  for (std::size_t k = 0; k < moduli.size(); ++k) out.emplace(moduli[k], std::move(*results[k]));
  return out;
}

template <class Real>
Real evaluate_float_waves(const std::map<unsigned, FloatWave<Real>>& waves, std::uint64_t t) {
  Real total = 0;
  for (const auto& [f, w] : waves) total += w(t);
  return total;
}

template struct FloatWave<double>;
template struct FloatWave<long double>;

#define CYCDENUM_INSTANTIATE(Real)                                                                        \
  template std::vector<std::complex<Real>> roots_of_unity<Real>(unsigned);                              \
  template FloatWave<Real> float_wave_f<Real>(std::span<const unsigned>, unsigned);                     \
  template std::map<unsigned, FloatWave<Real>> float_all_waves<Real>(std::span<const unsigned>,         \
                                                                      const WaveOptions&);               \
  template Real evaluate_float_waves<Real>(const std::map<unsigned, FloatWave<Real>>&, std::uint64_t);

CYCDENUM_INSTANTIATE(double)
CYCDENUM_INSTANTIATE(long double)

#undef CYCDENUM_INSTANTIATE

}  // namespace cycdenum
