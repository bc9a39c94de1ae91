#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycdenum/series.hpp"

namespace cycdenum {

/// Parameters of F(s) = e^{a s} prod_{b in B0} g(b s) prod_i prod_{b in B_i} g(b s, y_i)
/// with g(s) = s/(e^s - 1) and g(s, y) = 1/(1 - y(e^s - 1)).
///
/// `arg_scale` evaluates F(arg_scale * s) instead; the floating backend uses
/// it to keep power sums of large multisets inside the exponent range.
template <class C>
struct GtdSpec {
  Rational shift = 0;
  std::vector<std::int64_t> plain;
  std::vector<std::pair<std::vector<std::int64_t>, C>> mixed;
  std::size_t order = 1;
  Rational arg_scale = 1;

  void validate() const {
    if (order == 0) throw std::invalid_argument("GtdSpec: order must be positive");
    auto check = [](const std::vector<std::int64_t>& ms) {
      for (auto b : ms) {
        if (b == 0) throw std::invalid_argument("GtdSpec: multiset elements must be nonzero");
      }
    };
    check(plain);
    for (const auto& [ms, y] : mixed) check(ms);
  }
};

/// Generalized Todd sequence (gtd_0, ..., gtd_{d-1}) by the log-exp route:
/// H = a s + sum h(b s) + sum sum h(b s, y_i), then F = exp(H).
/// `one` is the unit of the coefficient ring.
template <class C>
TruncSeries<C> gtodd_sequence(const GtdSpec<C>& spec, const C& one) {
  using R = RingTraits<C>;
  spec.validate();
  const std::size_t d = spec.order;

  // Rational part: shift and the plain multiset.
  TruncSeries<Rational> h_plain(d, Rational(0));
  if (d > 1) h_plain[1] = spec.shift * spec.arg_scale;
  if (!spec.plain.empty()) h_plain += ts_sum_scaled(h_series(d), spec.plain, spec.arg_scale);
  TruncSeries<C> total = lift_series(h_plain, one);

  // Equal y values share one h(s, y) series.
  std::vector<std::pair<C, std::vector<std::int64_t>>> groups;
  for (const auto& [ms, y] : spec.mixed) {
    if (ms.empty()) continue;
    auto it = groups.begin();
    while (it != groups.end() && !(it->first == y)) ++it;
    if (it == groups.end()) {
      groups.emplace_back(y, ms);
    } else {
      it->second.insert(it->second.end(), ms.begin(), ms.end());
    }
  }
  for (const auto& [y, ms] : groups) {
    if (R::is_zero(y)) continue;
    total += ts_sum_scaled(h_y_series(y, d), ms, spec.arg_scale);
  }
  return ts_exp(total);
}

}  // namespace cycdenum
