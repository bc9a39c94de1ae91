#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cycdenum/quasipoly.hpp"

namespace cycdenum {

/// counts[t] = d(t; seq) for 0 <= t <= t_max, by the unbounded-knapsack
/// recurrence counts[t] += counts[t - a], one part at a time.
std::vector<Integer> dp_count(std::span<const unsigned> seq, std::uint64_t t_max);

struct PrimrootSums {
  std::complex<double> lhs;  // sum over primitive f-th roots of F(zeta)
  std::complex<double> rhs;  // (1/f) sum over all f-th roots of zeta F(zeta) cofactor(zeta) Phi'(zeta)
};

/// Both sides of the primitive-root summation identity, in complex doubles.
/// Throws std::overflow_error when F is not finite at some root.
PrimrootSums primroot_sum_check(unsigned f, const std::function<std::complex<double>(std::complex<double>)>& F);

struct OracleMismatch {
  std::uint64_t t;
};

struct OracleReport {
  std::optional<OracleMismatch> mismatch;
  std::uint64_t points_checked = 0;
  std::size_t moduli_used = 0;
};

/// Checks sum_f W_f(t) == d(t; seq) for every 0 <= t <= t_max.
///
/// Runs the DP and the wave evaluation side by side modulo several 62-bit
/// primes, streaming over t with O(max a) memory. The number of primes is
/// chosen from an exact bound on |D (sum W_f(t) - d(t))|, D the common
/// denominator of all wave coefficients, so agreement modulo every prime
/// implies exact equality.
OracleReport verify_waves_against_dp(std::span<const unsigned> seq, const std::map<unsigned, QuasiPolynomial>& waves,
                                     std::uint64_t t_max);

}  // namespace cycdenum
