#include "cycdenum/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace cycdenum {

using nlohmann::json;

json qp_to_json(const QuasiPolynomial& qp) {
  json comps = json::array();
  for (unsigned i = 1; i <= qp.period(); ++i) {
    json coeffs = json::array();
    for (const auto& c : qp.component(i).coeffs()) coeffs.push_back(to_string(c));
    comps.push_back({{"residue", i}, {"coeffs", std::move(coeffs)}});
  }
  return {{"period", qp.period()}, {"components", std::move(comps)}};
}

QuasiPolynomial qp_from_json(const json& j) {
  const auto period = j.at("period").get<unsigned>();
  std::vector<Poly> comps(period);
  std::vector<bool> seen(period, false);
  for (const auto& c : j.at("components")) {
    const auto residue = c.at("residue").get<unsigned>();
    if (residue < 1 || residue > period || seen[residue - 1]) {
      throw std::invalid_argument("qp_from_json: bad or repeated residue " + std::to_string(residue));
    }
    seen[residue - 1] = true;
    std::vector<Rational> coeffs;
    for (const auto& s : c.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
    comps[residue - 1] = Poly(std::move(coeffs));
  }
  for (unsigned i = 0; i < period; ++i) {
    if (!seen[i]) throw std::invalid_argument("qp_from_json: missing residue " + std::to_string(i + 1));
  }
  return {period, std::move(comps)};
}

json waves_to_json(std::span<const unsigned> seq, const std::map<unsigned, QuasiPolynomial>& waves,
                   std::uint64_t combine_limit) {
  json list = json::array();
  for (const auto& [f, w] : waves) {
    json entry = qp_to_json(w);
    entry["f"] = f;
    list.push_back(std::move(entry));
  }
  json doc;
  doc["sequence"] = std::vector<unsigned>(seq.begin(), seq.end());
  doc["backend"] = "exact";
  doc["waves"] = std::move(list);
  if (combined_period(waves) <= combine_limit) {
    doc["combined"] = qp_to_json(qp_combine(waves, combine_limit));
  } else {
    doc["combined"] = nullptr;
  }
  return doc;
}

std::map<unsigned, QuasiPolynomial> waves_from_json(const json& doc) {
  std::map<unsigned, QuasiPolynomial> out;
  for (const auto& w : doc.at("waves")) out.emplace(w.at("f").get<unsigned>(), qp_from_json(w));
  return out;
}

template <class Real>
std::string format_float(Real x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, static_cast<long double>(x));
  return buf;
}

template <class Real>
json float_waves_to_json(std::span<const unsigned> seq, const std::map<unsigned, FloatWave<Real>>& waves) {
  json list = json::array();
  for (const auto& [f, w] : waves) {
    json comps = json::array();
    const auto re = w.real_components();
    for (std::size_t i = 0; i < re.size(); ++i) {
      json coeffs = json::array();
      for (Real c : re[i]) coeffs.push_back(format_float(c));
      comps.push_back({{"residue", i + 1}, {"coeffs", std::move(coeffs)}});
    }
    list.push_back({{"f", f}, {"period", w.period}, {"components", std::move(comps)},
                    {"max_imag", format_float(w.max_imag)}});
  }
  json doc;
  doc["sequence"] = std::vector<unsigned>(seq.begin(), seq.end());
  doc["backend"] = "float";
  doc["waves"] = std::move(list);
  doc["combined"] = nullptr;
  return doc;
}

template std::string format_float<double>(double, int);
template std::string format_float<long double>(long double, int);
template json float_waves_to_json<double>(std::span<const unsigned>, const std::map<unsigned, FloatWave<double>>&);
template json float_waves_to_json<long double>(std::span<const unsigned>,
                                               const std::map<unsigned, FloatWave<long double>>&);

}  // namespace cycdenum
