#include "cycdenum/series.hpp"

#include <algorithm>
#include <mutex>

namespace cycdenum {

namespace {

std::mutex g_bernoulli_mu;
std::vector<Rational> g_bernoulli{Rational(1)};

std::mutex g_h_mu;
std::vector<Rational> g_h_coeffs;

}  // namespace

std::vector<Rational> scaled_power_sums(std::span<const std::int64_t> multiset, std::size_t order,
                                        const Rational& sigma) {
  std::vector<Rational> sums(order);
  if (order == 0) return sums;
  sums[0] = static_cast<unsigned long>(multiset.size());
  if (sigma == 1) {
    std::vector<Integer> sums_z(order);
    for (std::int64_t b : multiset) {
      Integer pw = 1;
      Integer bz(static_cast<long>(b));
      for (std::size_t k = 1; k < order; ++k) {
        pw *= bz;
        sums_z[k] += pw;
      }
    }
    for (std::size_t k = 1; k < order; ++k) sums[k] = sums_z[k];
    return sums;
  }
  for (std::int64_t b : multiset) {
    Rational base = sigma * Rational(static_cast<long>(b));
    Rational pw = 1;
    for (std::size_t k = 1; k < order; ++k) {
      pw *= base;
      sums[k] += pw;
    }
  }
  return sums;
}

std::vector<Rational> bernoulli_numbers(std::size_t n) {
  std::lock_guard lock(g_bernoulli_mu);
  // (k+1) B_k = -sum_{j<k} C(k+1, j) B_j
  while (g_bernoulli.size() < n) {
    const auto k = static_cast<unsigned>(g_bernoulli.size());
    Rational acc = 0;
    for (unsigned j = 0; j < k; ++j) {
      if (sgn(g_bernoulli[j]) == 0) continue;
      acc += Rational(binomial(k + 1, j)) * g_bernoulli[j];
    }
    acc /= static_cast<unsigned long>(k + 1);
    g_bernoulli.push_back(-acc);
  }
  return {g_bernoulli.begin(), g_bernoulli.begin() + static_cast<std::ptrdiff_t>(n)};
}

TruncSeries<Rational> todd_series(std::size_t order) {
  auto b = bernoulli_numbers(order);
  std::vector<Rational> c(order);
  for (std::size_t k = 0; k < order; ++k) c[k] = b[k] / Rational(factorial(static_cast<unsigned>(k)));
  return TruncSeries<Rational>(std::move(c));
}

TruncSeries<Rational> h_series(std::size_t order) {
  if (order == 0) throw std::invalid_argument("h_series: order must be positive");
  std::lock_guard lock(g_h_mu);
  if (g_h_coeffs.size() < order) {
    // Coefficients of a truncated log depend only on the leading terms, so a
    // longer cached prefix stays valid.
    std::size_t grow = std::max(order, 2 * g_h_coeffs.size());
    auto h = ts_log(todd_series(grow));
    g_h_coeffs.assign(h.coeffs().begin(), h.coeffs().end());
  }
  return TruncSeries<Rational>(
      std::vector<Rational>(g_h_coeffs.begin(), g_h_coeffs.begin() + static_cast<std::ptrdiff_t>(order)));
}

}  // namespace cycdenum
