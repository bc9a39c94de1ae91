#include <doctest.h>

#include <random>

#include "cycdenum/series.hpp"

using namespace cycdenum;

namespace {

// Canonical n/d (mpq_class does not reduce on construction).
Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational q(const char* s) { return parse_rational(s); }

TruncSeries<Rational> rs(std::initializer_list<const char*> cs) {
  std::vector<Rational> v;
  for (const char* c : cs) v.push_back(q(c));
  return TruncSeries<Rational>(std::move(v));
}

// Bernoulli numbers with B_1 = +1/2, independent of the library:
// B+_k = 1 - sum_{j<k} C(k, j) B+_j / (k - j + 1).
std::vector<Rational> bernoulli_plus(std::size_t n) {
  std::vector<Rational> b(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = 1;
    for (std::size_t j = 0; j < k; ++j) {
      acc -= Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) * b[j] /
             Rational(static_cast<long>(k - j + 1));
    }
    b[k] = acc;
  }
  return b;
}

TruncSeries<Rational> random_series(std::mt19937_64& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  TruncSeries<Rational> s(order, Rational(0));
  for (std::size_t k = 1; k < order; ++k) {
    s[k] = frac(num(rng), den(rng));
  }
  s[0] = unit ? 1 : 0;
  return s;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  const auto b = bernoulli_numbers(13);
  CHECK(b[0] == 1);
  CHECK(b[1] == q("-1/2"));
  CHECK(b[2] == q("1/6"));
  CHECK(b[3] == 0);
  CHECK(b[4] == q("-1/30"));
  CHECK(b[12] == q("-691/2730"));
}

TEST_CASE("todd series") {
  CHECK(todd_series(4) == rs({"1", "-1/2", "1/12", "0"}));
}

TEST_CASE("log of the todd series") {
  // ln(s/(e^s - 1)) = -s/2 - s^2/24 + s^4/2880 - ...
  CHECK(h_series(6) == rs({"0", "-1/2", "-1/24", "0", "1/2880", "0"}));
  CHECK(h_series(3) == h_series(10).truncated(3));
}

TEST_CASE("h_series against -sum B+_k s^k / (k k!)") {
  const std::size_t d = 40;
  const auto bp = bernoulli_plus(d);
  const auto h = h_series(d);
  CHECK(h[0] == 0);
  for (std::size_t k = 1; k < d; ++k) {
    const Rational expect = -bp[k] / (Rational(static_cast<long>(k)) * Rational(factorial(static_cast<unsigned>(k))));
    CHECK_MESSAGE(h[k] == expect, "k = " << k);
  }
}

TEST_CASE("h_y series") {
  const Rational y = q("3/5");
  const auto h = h_y_series(y, 3);
  CHECK(h[1] == y);
  CHECK(h[2] == y / 2 + y * y / 2);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(TruncSeries<Rational>(0, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(rs({"1", "2"}) + rs({"1"}), std::invalid_argument);
  CHECK_THROWS_AS(ts_mul(rs({"1", "2"}), rs({"1", "2", "3"})), std::invalid_argument);
  CHECK_THROWS_AS(ts_log(rs({"2", "1"})), std::domain_error);
  CHECK_THROWS_AS(ts_exp(rs({"1", "1"})), std::domain_error);
  const std::vector<std::int64_t> ms{1, 2};
  CHECK_THROWS_AS(ts_sum_scaled(rs({"1", "1"}), ms), std::domain_error);
}

TEST_CASE("product of g(b s) for b in {1, 3, 6}") {
  TruncSeries<Rational> prod = rs({"1", "0", "0"});
  for (std::int64_t b : {1, 3, 6}) prod = prod * ts_scale_arg(todd_series(3), b);
  CHECK(prod == rs({"1", "-5", "127/12"}));
  const std::vector<std::int64_t> ms{1, 3, 6};
  CHECK(ts_exp(ts_sum_scaled(h_series(3), ms)) == prod);
}

TEST_CASE("exp and log are inverse over the rationals") {
  std::mt19937_64 rng(1);
  for (std::size_t d : {1u, 2u, 5u, 17u, 40u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto h = random_series(rng, d, false);
      const auto g = random_series(rng, d, true);
      CHECK(ts_log(ts_exp(h)) == h);
      CHECK(ts_exp(ts_log(g)) == g);
    }
  }
}

TEST_CASE("log turns products into sums") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g1 = random_series(rng, 15, true), g2 = random_series(rng, 15, true);
    CHECK(ts_log(g1 * g2) == ts_log(g1) + ts_log(g2));
  }
}

TEST_CASE("exp and log are inverse over cyclotomic fields") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-5, 5);
  for (unsigned f : {3u, 4u, 5u}) {
    const auto ctx = CycCtx::get(f);
    for (int trial = 0; trial < 4; ++trial) {
      TruncSeries<CycElem> h(12, CycElem::zero(*ctx));
      for (std::size_t k = 1; k < 12; ++k) {
        h[k] = CycElem(*ctx, Poly{frac(num(rng), 3), Rational(num(rng)), frac(num(rng), 2)});
      }
      const auto g = ts_exp(h);
      CHECK(g[0] == CycElem::one(*ctx));
      CHECK(ts_log(g) == h);
    }
  }
}

TEST_CASE("sum_scaled matches explicit argument scaling") {
  const std::vector<std::int64_t> ms{2, -3, 5, 5};
  const auto h = h_series(12);
  TruncSeries<Rational> direct(12, Rational(0));
  for (auto b : ms) direct += ts_scale_arg(h, Rational(static_cast<long>(b)) * q("2/7"));
  CHECK(ts_sum_scaled(h, ms, q("2/7")) == direct);
  CHECK(ts_sum_scaled(h, std::span<const std::int64_t>{}) == TruncSeries<Rational>(12, Rational(0)));
}

TEST_CASE("complex coefficients") {
  using C = std::complex<double>;
  TruncSeries<C> h(6, C(0));
  h[1] = C(0.5, -0.25);
  h[3] = C(-1, 2);
  const auto back = ts_log(ts_exp(h));
  for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(back[k] - h[k]) < 1e-14);
}
