#include "cycdenum/bench.hpp"

#include <chrono>

#include "cycdenum/serialize.hpp"
#include "cycdenum/wave_exact.hpp"
#include "cycdenum/wave_float.hpp"

namespace cycdenum {

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (unsigned k = 2; k <= options.max_k; ++k) {
    const Sequence seq = upto(k);
    WaveOptions wopts;
    wopts.threads = options.threads;
    if (options.time_limit) wopts.deadline = Deadline::after(std::chrono::duration<double>(*options.time_limit));

    BenchRow row;
    row.k = k;
    const auto start = std::chrono::steady_clock::now();
    try {
      if (options.backend == Backend::exact) {
        const auto waves = all_waves(seq, wopts);
        row.wave_count = waves.size();
        row.value = to_string(evaluate_waves(waves, Integer(std::to_string(options.t))));
      } else {
        const auto waves = float_all_waves<double>(seq, wopts);
        row.wave_count = waves.size();
        row.value = format_float(evaluate_float_waves(waves, options.t), 12);
      }
    } catch (const Timeout&) {
      row.timed_out = true;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.time_limit && row.seconds > *options.time_limit) row.timed_out = true;
    if (options.on_row) options.on_row(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cycdenum
