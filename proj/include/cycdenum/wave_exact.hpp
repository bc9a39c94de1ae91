#pragma once

#include <map>
#include <span>
#include <vector>

#include "cycdenum/cyclotomic.hpp"
#include "cycdenum/quasipoly.hpp"
#include "cycdenum/sequence.hpp"
#include "cycdenum/series.hpp"

namespace cycdenum {

struct WaveOptions {
  /// 0 selects the number of logical processors.
  unsigned threads = 0;
  Deadline deadline;
};

/// Split of a sequence with respect to one modulus f.
struct WaveContext {
  Sequence seq;
  unsigned f = 1;
  std::vector<std::size_t> div_idx;     // f | a_i
  std::vector<std::size_t> nondiv_idx;  // f does not divide a_i
  Integer prod_div = 1;                 // prod_{f | a_i} a_i

  WaveContext(std::span<const unsigned> seq, unsigned f);
  std::size_t n_div() const noexcept { return div_idx.size(); }
};

/// Every intermediate of the exact computation of W_f for f > 1.
struct WaveTrace {
  /// prod_{f | a_i} g(a_i s) prod_{f !| a_i} g(a_i s, v_i - 1) mod s^n.
  TruncSeries<CycElem> todd;
  /// Standard form of prod_{f !| a_i} v_i.
  Poly v_product;
  /// M_m for m = 0..n-1.
  std::vector<Poly> m_polys;
  /// Row m holds c_{m,0..f-1}: M_m * cofactor * Phi' reduced mod x^f - 1.
  std::vector<std::vector<Rational>> coefficient_table;
  QuasiPolynomial wave;
};

/// W_1(t; a). Throws InvalidSequence when gcd(a) != 1.
QuasiPolynomial wave_one(std::span<const unsigned> seq);

/// W_f(t; a) for f >= 2 dividing some entry.
QuasiPolynomial wave_f(std::span<const unsigned> seq, unsigned f);
WaveTrace wave_f_trace(std::span<const unsigned> seq, unsigned f);

/// Every Sylvester wave, keyed by f over the union of divisors of the
/// entries. Waves for distinct f run on a worker pool.
std::map<unsigned, QuasiPolynomial> all_waves(std::span<const unsigned> seq, const WaveOptions& options = {});

/// d(t; a) as the sum of the waves at t.
Integer evaluate_waves(const std::map<unsigned, QuasiPolynomial>& waves, const Integer& t);

}  // namespace cycdenum
