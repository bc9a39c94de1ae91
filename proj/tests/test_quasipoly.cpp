#include <doctest.h>

#include "cycdenum/quasipoly.hpp"

using namespace cycdenum;

namespace {

Rational q(const char* s) { return parse_rational(s); }

QuasiPolynomial wave3() {
  return {3, {Poly{q("-1/54")}, Poly{q("-29/108"), q("-1/18")}, Poly{q("31/108"), q("1/18")}}};
}

}  // namespace

TEST_CASE("residue index selects P_f at multiples of the period") {
  CHECK(QuasiPolynomial::residue_index(std::uint64_t{0}, 3) == 3);
  CHECK(QuasiPolynomial::residue_index(std::uint64_t{1}, 3) == 1);
  CHECK(QuasiPolynomial::residue_index(std::uint64_t{5}, 3) == 2);
  CHECK(QuasiPolynomial::residue_index(std::uint64_t{6}, 3) == 3);
  CHECK(QuasiPolynomial::residue_index(std::uint64_t{7}, 1) == 1);
  // 10^20 = 2 (mod 7)
  CHECK(QuasiPolynomial::residue_index(Integer("100000000000000000000"), 7) == 2);
  CHECK(QuasiPolynomial::residue_index(Integer(70), 7) == 7);
}

TEST_CASE("evaluation") {
  const auto w = wave3();
  CHECK(w(std::uint64_t{0}) == q("31/108"));
  CHECK(w(std::uint64_t{1}) == q("-1/54"));
  CHECK(w(std::uint64_t{2}) == q("-29/108") - q("1/9"));
  CHECK(w(Integer(14)) == w(std::uint64_t{14}));
  CHECK(qp_eval(w, std::uint64_t{3}) == q("31/108") + q("1/6"));
  CHECK(w.degree() == 1);
}

TEST_CASE("constructor checks the component count") {
  CHECK_THROWS_AS(QuasiPolynomial(2, {Poly{1}}), std::invalid_argument);
  CHECK_THROWS_AS(QuasiPolynomial(0, {}), std::invalid_argument);
}

TEST_CASE("lift and add") {
  const auto w = wave3();
  const auto l = w.lifted(6);
  CHECK(l.period() == 6);
  for (std::uint64_t t = 0; t < 30; ++t) CHECK(l(t) == w(t));
  CHECK_THROWS_AS(w.lifted(4), std::invalid_argument);

  const QuasiPolynomial w2{2, {Poly{q("1/8")}, Poly{q("-1/8")}}};
  const auto sum = qp_add(w, w2);
  CHECK(sum.period() == 6);
  for (std::uint64_t t = 0; t < 30; ++t) CHECK(sum(t) == w(t) + w2(t));
}

TEST_CASE("combine") {
  std::map<unsigned, QuasiPolynomial> waves;
  waves.emplace(1, QuasiPolynomial(1, {Poly{q("127/216"), q("5/18"), q("1/36")}}));
  waves.emplace(2, QuasiPolynomial(2, {Poly{q("-1/8")}, Poly{q("1/8")}}));
  waves.emplace(3, wave3());
  waves.emplace(4, QuasiPolynomial(4, {Poly{1}, Poly{0, 1}, Poly{2}, Poly{0, 0, 1}}));
  CHECK(combined_period(waves) == 12);
  const auto all = qp_combine(waves);
  CHECK(all.period() == 12);
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rational sum = 0;
    for (const auto& [f, w] : waves) sum += w(t);
    CHECK(all(t) == sum);
  }
  CHECK_THROWS_AS(qp_combine(waves, 11), std::length_error);
}

TEST_CASE("to_string") {
  CHECK(wave3().to_string() == "[-1/54, -t/18 - 29/108, t/18 + 31/108]");
  CHECK(QuasiPolynomial::constant(1).to_string() == "[1]");
  CHECK(QuasiPolynomial::zero().to_string() == "[0]");
}
