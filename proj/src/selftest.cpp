#include "cycdenum/selftest.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/oracle.hpp"
#include "cycdenum/series.hpp"
#include "cycdenum/wave_exact.hpp"

namespace cycdenum {

namespace {

Poly parse_poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return Poly(std::move(v));
}

QuasiPolynomial golden(unsigned f, std::initializer_list<std::initializer_list<const char*>> comps) {
  std::vector<Poly> polys;
  for (auto c : comps) polys.push_back(parse_poly(c));
  return {f, std::move(polys)};
}

void golden_section(SelftestSection& sec, unsigned threads) {
  const Sequence seq{1, 3, 6};
  const std::map<unsigned, QuasiPolynomial> expected{
      {1, golden(1, {{"127/216", "5/18", "1/36"}})},
      {2, golden(2, {{"-1/24"}, {"1/24"}})},
      {3, golden(3, {{"-1/54"}, {"-29/108", "-1/18"}, {"31/108", "1/18"}})},
      {6, golden(6, {{"1/6"}, {"1/12"}, {"-1/12"}, {"-1/6"}, {"-1/12"}, {"1/12"}})},
  };
  WaveOptions opts;
  opts.threads = threads;
  const auto waves = all_waves(seq, opts);
  ++sec.checks;
  if (waves.size() != expected.size()) {
    sec.passed = false;
    sec.failure = "(1,3,6): expected 4 waves, got " + std::to_string(waves.size());
    return;
  }
  for (const auto& [f, w] : expected) {
    ++sec.checks;
    auto it = waves.find(f);
    if (it == waves.end() || !(it->second == w)) {
      sec.passed = false;
      sec.failure = "(1,3,6): W_" + std::to_string(f) + " = " +
                    (it == waves.end() ? std::string("missing") : it->second.to_string()) + ", expected " +
                    w.to_string();
      return;
    }
  }
  ++sec.checks;
  if (evaluate_waves(waves, Integer(14)) != 9) {
    sec.passed = false;
    sec.failure = "(1,3,6): d(14) != 9";
  }
}

void cyclotomic_section(SelftestSection& sec, const std::function<Poly(unsigned)>& phi) {
  for (unsigned n = 1; n <= 200; ++n) {
    ++sec.checks;
    Poly prod = Poly::constant(1);
    for (unsigned d : divisors(n)) prod = poly_mul(prod, phi(d));
    if (!(prod == Poly::x_pow_minus_one(n))) {
      sec.passed = false;
      sec.failure = "cyclotomic identity: product of Phi_d over d | " + std::to_string(n) + " is not x^" +
                    std::to_string(n) + " - 1";
      return;
    }
  }
}

void series_section(SelftestSection& sec, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  for (std::size_t order : {8u, 64u}) {
    for (int trial = 0; trial < 5; ++trial) {
      ++sec.checks;
      std::vector<Rational> c(order);
      c[0] = 1;
      for (std::size_t k = 1; k < order; ++k) {
        c[k] = Rational(num(rng), den(rng));
        c[k].canonicalize();
      }
      TruncSeries<Rational> p(std::move(c));
      if (!(ts_exp(ts_log(p)) == p)) {
        sec.passed = false;
        sec.failure = "exp(log(p)) != p at order " + std::to_string(order);
        return;
      }
    }
  }
}

void oracle_section(SelftestSection& sec, std::mt19937_64& rng, unsigned count, unsigned threads) {
  WaveOptions opts;
  opts.threads = threads;
  for (unsigned i = 0; i < count; ++i) {
    ++sec.checks;
    const Sequence seq = random_sequence(rng, 1, 5, 20);
    std::uint64_t l = 1;
    for (unsigned a : seq) l = std::lcm(l, static_cast<std::uint64_t>(a));
    const auto waves = all_waves(seq, opts);
    const auto report = verify_waves_against_dp(seq, waves, 3 * l);
    if (report.mismatch) {
      std::ostringstream os;
      os << "oracle mismatch for a = (";
      for (std::size_t j = 0; j < seq.size(); ++j) os << (j ? "," : "") << seq[j];
      os << ") at t = " << report.mismatch->t;
      sec.passed = false;
      sec.failure = os.str();
      return;
    }
  }
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& s : sections) {
    if (!s.passed) return false;
  }
  return true;
}

std::size_t SelftestReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.checks;
  return n;
}

std::string SelftestReport::first_failure() const {
  for (const auto& s : sections) {
    if (!s.passed) return s.name + ": " + s.failure;
  }
  return {};
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  std::mt19937_64 rng(options.seed);
  std::function<Poly(unsigned)> phi = options.phi_provider;
  if (!phi) phi = [](unsigned n) { return cyclotomic_poly(n); };

  auto run = [&](const std::string& name, auto&& body) {
    SelftestSection sec{name};
    try {
      body(sec);
    } catch (const std::exception& e) {
      sec.passed = false;
      sec.failure = std::string("exception: ") + e.what();
    }
    report.sections.push_back(std::move(sec));
  };
  run("golden waves (1,3,6)", [&](SelftestSection& s) { golden_section(s, options.threads); });
  run("cyclotomic identity", [&](SelftestSection& s) { cyclotomic_section(s, phi); });
  run("exp/log round trip", [&](SelftestSection& s) { series_section(s, rng); });
  run("oracle equivalence", [&](SelftestSection& s) { oracle_section(s, rng, options.random_sequences, options.threads); });
  return report;
}

void print_report(std::ostream& os, const SelftestReport& report) {
  for (const auto& s : report.sections) {
    os << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)";
    if (!s.passed) os << ": " << s.failure;
    os << "\n";
  }
  os << (report.passed() ? "PASS" : "FAIL") << ": " << report.total_checks() << " checks executed\n";
}

}  // namespace cycdenum
