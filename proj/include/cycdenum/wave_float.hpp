#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cycdenum/wave_exact.hpp"

namespace cycdenum {

/// W_f with every primitive root replaced by a floating approximation.
/// components[i-1][m] is the complex coefficient of t^m in P_i.
template <class Real>
struct FloatWave {
  unsigned period = 1;
  std::vector<std::vector<std::complex<Real>>> components;
  /// Largest |imaginary part| over all coefficients; the exact values are real.
  Real max_imag = 0;

  std::vector<std::vector<Real>> real_components() const;
  /// Real part of P_i(t) with t selecting the residue class as usual.
  Real operator()(std::uint64_t t) const;
  Real operator()(Real t, std::uint64_t residue_t) const;
};

/// e^{2 pi i k / f} for k = 0..f-1, each computed directly from its angle.
template <class Real>
std::vector<std::complex<Real>> roots_of_unity(unsigned f);

template <class Real>
FloatWave<Real> float_wave_f(std::span<const unsigned> seq, unsigned f);

template <class Real>
std::map<unsigned, FloatWave<Real>> float_all_waves(std::span<const unsigned> seq, const WaveOptions& options = {});

/// Sum of the real parts of all waves at t.
template <class Real>
Real evaluate_float_waves(const std::map<unsigned, FloatWave<Real>>& waves, std::uint64_t t);

extern template struct FloatWave<double>;
extern template struct FloatWave<long double>;

}  // namespace cycdenum
