#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "cycdenum/quasipoly.hpp"
#include "cycdenum/wave_float.hpp"

namespace cycdenum {

/// {"period": f, "components": [{"residue": i, "coeffs": ["num/den", ...]}]}
/// with coefficients ascending in t.
nlohmann::json qp_to_json(const QuasiPolynomial& qp);
QuasiPolynomial qp_from_json(const nlohmann::json& j);

/// Top-level document: {sequence, backend, waves: [...], combined}. The
/// combined quasi-polynomial is null when its period exceeds combine_limit.
nlohmann::json waves_to_json(std::span<const unsigned> seq, const std::map<unsigned, QuasiPolynomial>& waves,
                             std::uint64_t combine_limit = 1u << 16);
std::map<unsigned, QuasiPolynomial> waves_from_json(const nlohmann::json& doc);

/// Floating waves: real parts as 17-significant-digit decimal strings, plus
/// each wave's imaginary residual.
template <class Real>
nlohmann::json float_waves_to_json(std::span<const unsigned> seq, const std::map<unsigned, FloatWave<Real>>& waves);

template <class Real>
std::string format_float(Real x, int digits = 17);

}  // namespace cycdenum
