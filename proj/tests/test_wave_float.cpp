#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycdenum/wave_float.hpp"

using namespace cycdenum;

namespace {

// Largest |float - exact| over every coefficient of every wave.
template <class Real>
double max_coeff_error(const std::map<unsigned, FloatWave<Real>>& fw,
                       const std::map<unsigned, QuasiPolynomial>& ew) {
  REQUIRE(fw.size() == ew.size());
  double err = 0;
  for (const auto& [f, w] : ew) {
    const auto re = fw.at(f).real_components();
    REQUIRE(re.size() == w.period());
    for (unsigned i = 1; i <= w.period(); ++i) {
      const auto& p = w.component(i);
      const std::size_t len = std::max<std::size_t>(p.size(), re[i - 1].size());
      for (std::size_t k = 0; k < len; ++k) {
        const double approx = k < re[i - 1].size() ? static_cast<double>(re[i - 1][k]) : 0.0;
        err = std::max(err, std::abs(approx - to_floating<double>(p[k])));
      }
    }
  }
  return err;
}

}  // namespace

TEST_CASE("roots of unity") {
  for (unsigned f = 1; f <= 500; ++f) {
    const auto eta = roots_of_unity<double>(f);
    REQUIRE(eta.size() == f);
    std::complex<double> pw = 1;
    for (unsigned k = 0; k < f; ++k) pw *= eta[f > 1 ? 1 : 0];
    CHECK(std::abs(pw - 1.0) < 1e-12);
  }
}

TEST_CASE("floating waves of (1, 3, 6)") {
  const Sequence a{1, 3, 6};
  const auto fw = float_all_waves<double>(a);
  REQUIRE(fw.size() == 4);
  const auto w1 = fw.at(1).real_components();
  CHECK(w1[0][2] == doctest::Approx(0.02777777778).epsilon(1e-9));
  CHECK(w1[0][1] == doctest::Approx(0.2777777778).epsilon(1e-9));
  CHECK(w1[0][0] == doctest::Approx(0.5879629633).epsilon(1e-9));
  const auto w2 = fw.at(2).real_components();
  CHECK(w2[0][0] == doctest::Approx(-0.04166666667).epsilon(1e-9));
  CHECK(w2[1][0] == doctest::Approx(0.04166666667).epsilon(1e-9));

  CHECK(max_coeff_error(fw, all_waves(a)) < 1e-12);
  CHECK(evaluate_float_waves(fw, 14) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(std::abs(evaluate_float_waves(fw, 1789682) - 88971554961.0) < 1.0);
  for (const auto& [f, w] : fw) CHECK(w.max_imag < 1e-12);
}

TEST_CASE("extended precision") {
  const Sequence a{1, 3, 6};
  const auto fw = float_all_waves<long double>(a);
  CHECK(max_coeff_error(fw, all_waves(a)) < 1e-12);
  CHECK(std::abs(static_cast<double>(evaluate_float_waves(fw, 1789682)) - 88971554961.0) < 0.01);
}

TEST_CASE("floating coefficients within 1e-6 of the exact ones") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const Sequence a = random_sequence(rng, 1, 10, 20);
    CHECK_MESSAGE(max_coeff_error(float_all_waves<double>(a), all_waves(a)) < 1e-6, "trial " << trial);
  }
}

TEST_CASE("imaginary residuals stay small up to f = 50") {
  const Sequence a{1, 29, 37, 41, 43, 47, 48, 49, 50};
  const auto fw = float_all_waves<double>(a);
  for (const auto& [f, w] : fw) CHECK_MESSAGE(w.max_imag < 1e-8, "f = " << f);
}

TEST_CASE("single entry and errors") {
  const Sequence one{1};
  const auto fw = float_all_waves<double>(one);
  REQUIRE(fw.size() == 1);
  CHECK(fw.at(1)(std::uint64_t{5}) == doctest::Approx(1.0));
  const Sequence a{1, 3, 6};
  CHECK_THROWS_AS(float_wave_f<double>(a, 4), std::invalid_argument);
  const Sequence bad{4, 6};
  CHECK_THROWS_AS(float_all_waves<double>(bad), InvalidSequence);
}

TEST_CASE("d(10^6; 1..k) in floating point agrees with the exact value for k <= 20") {
  // Absolute agreement is out of reach here (the values exceed 2^53 from
  // k = 5 on), so the comparison is relative.
  for (unsigned k : {2u, 5u, 10u, 15u, 20u}) {
    const Sequence a = upto(k);
    const double approx = evaluate_float_waves(float_all_waves<double>(a), 1000000);
    const double exact = to_floating<double>(Rational(evaluate_waves(all_waves(a), Integer(1000000))));
    CHECK_MESSAGE(std::abs(approx - exact) <= 1e-9 * exact, "k = " << k);
  }
}
