// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cycdenum/bench.hpp"
#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/oracle.hpp"
#include "cycdenum/series.hpp"
#include "cycdenum/wave_exact.hpp"
#include "cycdenum/wave_float.hpp"

using namespace cycdenum;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Rational q(const char* s) { return parse_rational(s); }

Poly qpoly(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) v.push_back(q(c));
  return Poly(std::move(v));
}

std::uint64_t lcm_of(const Sequence& a) {
  std::uint64_t l = 1;
  for (auto x : a) l = std::lcm(l, std::uint64_t{x});
  return l;
}

std::string seq_str(const Sequence& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

Outcome golden_waves() {
  const auto waves = all_waves(Sequence{1, 3, 6});
  const std::map<unsigned, QuasiPolynomial> expected{
      {1, QuasiPolynomial(1, {qpoly({"127/216", "5/18", "1/36"})})},
      {2, QuasiPolynomial(2, {qpoly({"-1/24"}), qpoly({"1/24"})})},
      {3, QuasiPolynomial(3, {qpoly({"-1/54"}), qpoly({"-29/108", "-1/18"}), qpoly({"31/108", "1/18"})})},
      {6, QuasiPolynomial(6, {qpoly({"1/6"}), qpoly({"1/12"}), qpoly({"-1/12"}), qpoly({"-1/6"}), qpoly({"-1/12"}),
                              qpoly({"1/12"})})},
  };
  if (waves != expected) {
    std::string got;
    for (const auto& [f, w] : waves) got += " W_" + std::to_string(f) + "=" + w.to_string();
    return {false, "got" + got};
  }
  return {};
}

Outcome point_values() {
  const auto waves = all_waves(Sequence{1, 3, 6});
  const Integer d14 = evaluate_waves(waves, Integer(14));
  const Integer dbig = evaluate_waves(waves, Integer(1789682));
  if (d14 != 9 || dbig != Integer("88971554961")) {
    return {false, "d(14) = " + d14.get_str() + ", d(1789682) = " + dbig.get_str()};
  }
  return {};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2024);
  std::uint64_t points = 0;
  for (int i = 0; i < 200; ++i) {
    const Sequence a = random_sequence(rng, 1, 6, 30);
    const std::uint64_t t_max = 3 * lcm_of(a);
    const auto rep = verify_waves_against_dp(a, all_waves(a), t_max);
    points += rep.points_checked;
    if (rep.mismatch) return {false, "a = " + seq_str(a) + " differs at t = " + std::to_string(rep.mismatch->t)};
    if (rep.points_checked != t_max + 1) return {false, "a = " + seq_str(a) + ": incomplete scan"};
  }
  return {true, std::to_string(points) + " points"};
}

Outcome cyclotomic_identity() {
  for (unsigned n = 1; n <= 200; ++n) {
    Poly prod = Poly::constant(1);
    for (unsigned d : divisors(n)) prod = poly_mul(prod, cyclotomic_poly(d));
    if (prod != Poly::x_pow_minus_one(n)) return {false, "n = " + std::to_string(n)};
  }
  return {};
}

template <class C>
bool round_trip(std::mt19937_64& rng, const C& one, const std::function<C(std::mt19937_64&)>& draw) {
  std::vector<C> c;
  c.push_back(one);
  for (std::size_t k = 1; k < 64; ++k) c.push_back(draw(rng));
  const TruncSeries<C> p(std::move(c));
  return ts_exp(ts_log(p)) == p;
}

Outcome series_round_trip() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-100, 100), den(1, 30);
  auto rat = [&](std::mt19937_64& g) {
    Rational r(num(g), den(g));
    r.canonicalize();
    return r;
  };
  const auto ctx = CycCtx::get(5);
  for (int i = 0; i < 50; ++i) {
    if (!round_trip<Rational>(rng, Rational(1), rat)) return {false, "rational trial " + std::to_string(i)};
  }
  for (int i = 0; i < 50; ++i) {
    const bool ok = round_trip<CycElem>(rng, CycElem::one(*ctx), [&](std::mt19937_64& g) {
      return CycElem(*ctx, Poly{rat(g), rat(g), rat(g), rat(g)});
    });
    if (!ok) return {false, "Q(zeta_5) trial " + std::to_string(i)};
  }
  return {true, "100 series"};
}

// |ours - ref| within 5e-9 of the larger of |ref| and the component's
// largest coefficient, i.e. agreement to 8 significant digits.
bool close8(double ours, double ref, double scale) {
  return std::abs(ours - ref) <= 5e-9 * std::max(std::abs(ref), scale);
}

Outcome float_fidelity() {
  std::mt19937_64 rng(6);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const Sequence a = random_sequence(rng, 1, 10, 20);
    const auto fw = float_all_waves<double>(a);
    const auto ew = all_waves(a);
    for (const auto& [f, w] : ew) {
      const auto re = fw.at(f).real_components();
      for (unsigned r = 1; r <= w.period(); ++r) {
        const auto& p = w.component(r);
        const std::size_t len = std::max(p.size(), re[r - 1].size());
        for (std::size_t k = 0; k < len; ++k) {
          const double approx = k < re[r - 1].size() ? re[r - 1][k] : 0.0;
          worst = std::max(worst, std::abs(approx - to_floating<double>(p[k])));
        }
      }
    }
    if (worst > 1e-6) return {false, "a = " + seq_str(a) + ": error " + std::to_string(worst)};
  }

  // Printed approximations of the floating example, ascending in t.
  const std::map<unsigned, std::vector<std::vector<double>>> published{
      {1, {{0.5879629633, 0.2777777778, 0.02777777778}}},
      {2, {{-0.04166666667}, {0.04166666667}}},
      {3, {{-0.01851851856, -3.182178376e-12}, {-0.2685185186, -0.05555555556}, {0.2870370370, 0.05555555554}}},
      {6, {{0.1666666667}, {0.08333333340}, {-0.08333333332}, {-0.1666666666}, {-0.08333333330}, {0.08333333328}}},
  };
  const auto fw = float_all_waves<double>(Sequence{1, 3, 6});
  for (const auto& [f, comps] : published) {
    const auto re = fw.at(f).real_components();
    for (std::size_t r = 0; r < comps.size(); ++r) {
      double scale = 0;
      for (double c : comps[r]) scale = std::max(scale, std::abs(c));
      for (std::size_t k = 0; k < comps[r].size(); ++k) {
        const double ours = k < re[r].size() ? re[r][k] : 0.0;
        if (!close8(ours, comps[r][k], scale)) {
          std::ostringstream os;
          os.precision(12);
          os << "W_" << f << " component " << r + 1 << " t^" << k << ": " << ours << " vs " << comps[r][k];
          return {false, os.str()};
        }
      }
    }
  }
  const double d14 = evaluate_float_waves(fw, 14);
  if (!close8(d14, 9.000000001, 0)) return {false, "d(14) ~ " + std::to_string(d14)};
  std::ostringstream os;
  os << "max error " << worst;
  return {true, os.str()};
}

Outcome bench_floor(Backend backend, unsigned max_k) {
  BenchOptions opts;
  opts.max_k = max_k;
  opts.backend = backend;
  opts.time_limit = 60;
  double total = 0;
  for (const auto& row : run_bench(opts)) {
    total += row.seconds;
    if (row.timed_out) return {false, "k = " + std::to_string(row.k) + " timed out"};
  }
  if (total >= 60) return {false, "total " + std::to_string(total) + " s"};
  return {true, "total " + std::to_string(total) + " s"};
}

Outcome worked_example_intermediates() {
  const auto ctx = CycCtx::get(3);
  if (inverse_one_minus(*ctx, 1) != qpoly({"2/3", "1/3"})) return {false, "inverse of 1 - x"};
  const auto tr = wave_f_trace(Sequence{1, 3, 6}, 3);
  if (tr.todd.order() != 2 || tr.todd[0].rep() != Poly{1} || tr.todd[1].rep() != qpoly({"-29/6", "1/3"})) {
    return {false, "todd product mod s^2"};
  }
  if (tr.m_polys.size() != 2 || tr.m_polys[0] != qpoly({"-10/3", "-3/2"})) return {false, "M_0"};
  if (tr.coefficient_table.size() != 2) return {false, "table rows"};
  if (tr.coefficient_table[0] != std::vector<Rational>{q("1/3"), q("29/6"), q("-31/6")}) return {false, "row m = 0"};
  if (tr.coefficient_table[1] != std::vector<Rational>{0, -1, 1}) return {false, "row m = 1"};
  return {};
}

Outcome primitive_root_sums() {
  using cd = std::complex<double>;
  const std::vector<std::function<cd(cd)>> fns{
      [](cd x) { return 1.0 / (2.0 - x); },
      [](cd x) { return (x * x + 1.0) / (3.0 + x); },
      [](cd x) { return (2.0 * x * x * x - x + 0.5) / ((5.0 - x) * (4.0 + x * x)); },
  };
  double worst = 0;
  for (unsigned f = 1; f <= 12; ++f) {
    for (const auto& F : fns) {
      const auto s = primroot_sum_check(f, F);
      worst = std::max(worst, std::abs(s.lhs - s.rhs));
    }
  }
  std::ostringstream os;
  os << "max |lhs - rhs| " << worst;
  return {worst < 1e-9, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"golden waves of (1,3,6)", 1, golden_waves},
      {"point values d(14) and d(1789682)", 1, point_values},
      {"oracle equivalence on 200 random sequences", 60, oracle_equivalence},
      {"cyclotomic product identity n <= 200", 10, cyclotomic_identity},
      {"series exp/log round trip at order 64", 10, series_round_trip},
      {"float fidelity", 30, float_fidelity},
      {"bench exact k <= 40 and float k <= 60", 120, [] {
         Outcome e = bench_floor(Backend::exact, 40);
         if (!e.ok) return Outcome{false, "exact: " + e.detail};
         Outcome f = bench_floor(Backend::floating, 60);
         return Outcome{f.ok, "exact " + e.detail + ", float " + f.detail};
       }},
      {"worked example intermediates", 1, worked_example_intermediates},
      {"primitive root summation f <= 12", 1, primitive_root_sums},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (out.ok && secs >= c.budget) {
      out.ok = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.budget)) + " s budget)";
    }
    if (!out.ok) ++failures;
    std::printf("%s [%zu] %s  %.3f s%s%s\n", out.ok ? "PASS" : "FAIL", i + 1, c.name, secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
