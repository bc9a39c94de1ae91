// Python bindings. Exact values cross the boundary as decimal strings and
// are turned into int / Fraction by the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/oracle.hpp"
#include "cycdenum/selftest.hpp"
#include "cycdenum/serialize.hpp"
#include "cycdenum/wave_exact.hpp"
#include "cycdenum/wave_float.hpp"

namespace py = pybind11;
using namespace cycdenum;

namespace {

using StrPoly = std::vector<std::string>;

StrPoly poly_strings(const Poly& p) {
  StrPoly out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::map<unsigned, std::vector<StrPoly>> waves(const Sequence& seq, unsigned threads) {
  WaveOptions opts;
  opts.threads = threads;
  std::map<unsigned, QuasiPolynomial> w;
  {
    py::gil_scoped_release release;
    w = all_waves(seq, opts);
  }
  std::map<unsigned, std::vector<StrPoly>> out;
  for (const auto& [f, qp] : w) {
    auto& comps = out[f];
    for (const auto& p : qp.components()) comps.push_back(poly_strings(p));
  }
  return out;
}

std::string evaluate(const Sequence& seq, const std::string& t, unsigned threads) {
  const Integer tz(t);
  if (sgn(tz) < 0) throw std::invalid_argument("t must be nonnegative");
  WaveOptions opts;
  opts.threads = threads;
  py::gil_scoped_release release;
  return evaluate_waves(all_waves(seq, opts), tz).get_str();
}

template <class Real>
py::dict float_waves_impl(const Sequence& seq, unsigned threads) {
  WaveOptions opts;
  opts.threads = threads;
  std::map<unsigned, FloatWave<Real>> w;
  {
    py::gil_scoped_release release;
    w = float_all_waves<Real>(seq, opts);
  }
  py::dict out;
  for (const auto& [f, fw] : w) {
    std::vector<std::vector<double>> comps;
    for (const auto& row : fw.real_components()) comps.emplace_back(row.begin(), row.end());
    out[py::int_(f)] = py::make_tuple(comps, static_cast<double>(fw.max_imag));
  }
  return out;
}

py::dict float_waves(const Sequence& seq, bool extended, unsigned threads) {
  return extended ? float_waves_impl<long double>(seq, threads) : float_waves_impl<double>(seq, threads);
}

double float_evaluate(const Sequence& seq, std::uint64_t t, bool extended, unsigned threads) {
  WaveOptions opts;
  opts.threads = threads;
  py::gil_scoped_release release;
  if (extended) return static_cast<double>(evaluate_float_waves(float_all_waves<long double>(seq, opts), t));
  return evaluate_float_waves(float_all_waves<double>(seq, opts), t);
}

std::vector<std::string> dp(const Sequence& seq, std::uint64_t t_max) {
  std::vector<std::string> out;
  for (const auto& c : dp_count(seq, t_max)) out.push_back(c.get_str());
  return out;
}

std::string waves_json(const Sequence& seq, unsigned threads) {
  WaveOptions opts;
  opts.threads = threads;
  return waves_to_json(seq, all_waves(seq, opts)).dump();
}

py::tuple selftest(unsigned random_sequences, std::uint64_t seed) {
  SelftestOptions opts;
  opts.random_sequences = random_sequences;
  opts.seed = seed;
  SelftestReport report;
  {
    py::gil_scoped_release release;
    report = run_selftest(opts);
  }
  std::ostringstream os;
  print_report(os, report);
  return py::make_tuple(report.passed(), report.total_checks(), os.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sylvester denumerants via cyclotomic wave decomposition";

  m.def("waves", &waves, py::arg("seq"), py::arg("threads") = 0,
        "Exact waves: {f: [[coeff, ...] per residue 1..f]} with 'num/den' strings, ascending in t.");
  m.def("evaluate", &evaluate, py::arg("seq"), py::arg("t"), py::arg("threads") = 0,
        "d(t; seq) as a decimal string; t is passed as a decimal string.");
  m.def("float_waves", &float_waves, py::arg("seq"), py::arg("extended") = false, py::arg("threads") = 0);
  m.def("float_evaluate", &float_evaluate, py::arg("seq"), py::arg("t"), py::arg("extended") = false,
        py::arg("threads") = 0);
  m.def("dp_count", &dp, py::arg("seq"), py::arg("t_max"));
  m.def("cyclotomic_poly", [](unsigned f) { return poly_strings(cyclotomic_poly(f)); }, py::arg("f"));
  m.def("waves_json", &waves_json, py::arg("seq"), py::arg("threads") = 0);
  m.def("selftest", &selftest, py::arg("random_sequences") = 25, py::arg("seed") = 20240601);
}
