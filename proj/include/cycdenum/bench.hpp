#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cycdenum {

enum class Backend { exact, floating };

struct BenchRow {
  unsigned k = 0;
  double seconds = 0;
  bool timed_out = false;
  std::size_t wave_count = 0;
  /// d(t; 1..k) as text: an integer (exact) or a decimal approximation.
  std::string value;
};

struct BenchOptions {
  unsigned max_k = 12;
  Backend backend = Backend::exact;
  std::uint64_t t = 1000000;
  /// Per-row wall clock limit in seconds.
  std::optional<double> time_limit;
  unsigned threads = 0;
  /// Called as soon as each row finishes.
  std::function<void(const BenchRow&)> on_row;
};

/// Times the computation of all waves of (1, 2, ..., k) and their value at
/// t, for k = 2..max_k. A row that exceeds the time limit is marked and the
/// run moves on.
std::vector<BenchRow> run_bench(const BenchOptions& options);

}  // namespace cycdenum
