// denum: Sylvester denumerants and their waves from the command line.
//
// Exit codes: 0 success, 1 self-test failure, 2 invalid input.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "cycdenum/bench.hpp"
#include "cycdenum/selftest.hpp"
#include "cycdenum/serialize.hpp"
#include "cycdenum/wave_exact.hpp"
#include "cycdenum/wave_float.hpp"

namespace {

using namespace cycdenum;

constexpr int kExitSelftest = 1;
constexpr int kExitInvalid = 2;

struct CliConfig {
  std::string seq_text;
  unsigned upto_k = 0;
  std::string backend = "exact";
  std::string output = "text";
  std::string precision = "double";
  std::optional<std::string> t_text;
  unsigned bench_k = 12;
  double time_limit_secs = 60;
  std::uint64_t bench_t = 1000000;
  unsigned threads = 0;
  std::uint64_t combine_limit = 1u << 16;
  unsigned random_sequences = 25;
  std::uint64_t seed = 20240601;
  std::string inject_fault;
};

Sequence resolve_sequence(const CliConfig& cfg) {
  if (!cfg.seq_text.empty() && cfg.upto_k != 0) throw InvalidSequence("give either -a or --upto, not both");
  Sequence seq = cfg.upto_k != 0 ? upto(cfg.upto_k) : parse_sequence(cfg.seq_text);
  validate_sequence(seq);
  return seq;
}

void add_sequence_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("-a,--seq", cfg.seq_text, "comma separated sequence, e.g. 1,3,6");
  cmd->add_option("--upto", cfg.upto_k, "use the sequence 1,2,...,k");
  cmd->add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--precision", cfg.precision, "float backend precision: double or extended")
      ->check(CLI::IsMember({"double", "extended"}));
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = logical processors)");
}

template <class Real>
void print_float_waves(std::ostream& os, const std::map<unsigned, FloatWave<Real>>& waves) {
  for (const auto& [f, w] : waves) {
    os << "W_" << f << "(t) ~ [";
    const auto re = w.real_components();
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (i) os << ", ";
      bool first = true;
      for (std::size_t k = re[i].size(); k-- > 0;) {
        if (!first) os << " + ";
        first = false;
        os << format_float(re[i][k], 10);
        if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
      }
    }
    os << "]  (max |imag| " << format_float(w.max_imag, 3) << ")\n";
  }
}

template <class Real>
int float_waves_cmd(const Sequence& seq, const CliConfig& cfg) {
  WaveOptions opts;
  opts.threads = cfg.threads;
  const auto waves = float_all_waves<Real>(seq, opts);
  if (cfg.output == "json") {
    std::cout << float_waves_to_json(seq, waves).dump(2) << "\n";
  } else {
    print_float_waves(std::cout, waves);
  }
  return 0;
}

int cmd_waves(const CliConfig& cfg) {
  const Sequence seq = resolve_sequence(cfg);
  if (cfg.backend == "float") {
    return cfg.precision == "extended" ? float_waves_cmd<long double>(seq, cfg) : float_waves_cmd<double>(seq, cfg);
  }
  WaveOptions opts;
  opts.threads = cfg.threads;
  const auto waves = all_waves(seq, opts);
  if (cfg.output == "json") {
    std::cout << waves_to_json(seq, waves, cfg.combine_limit).dump(2) << "\n";
    return 0;
  }
  for (const auto& [f, w] : waves) std::cout << "W_" << f << "(t) = " << w.to_string() << "\n";
  return 0;
}

template <class Real>
int float_eval_cmd(const Sequence& seq, const CliConfig& cfg, std::uint64_t t) {
  WaveOptions opts;
  opts.threads = cfg.threads;
  const auto waves = float_all_waves<Real>(seq, opts);
  const Real value = evaluate_float_waves(waves, t);
  Real residual = 0;
  for (const auto& [f, w] : waves) residual = std::max(residual, w.max_imag);
  if (cfg.output == "json") {
    nlohmann::json doc{{"sequence", seq},
                       {"backend", "float"},
                       {"t", std::to_string(t)},
                       {"value", format_float(value)},
                       {"max_imag", format_float(residual)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << format_float(value, 16) << "\n";
    std::cerr << "max |imag| over wave coefficients: " << format_float(residual, 3) << "\n";
  }
  return 0;
}

int cmd_eval(const CliConfig& cfg) {
  const Sequence seq = resolve_sequence(cfg);
  if (!cfg.t_text) throw InvalidSequence("eval requires -t");
  const Rational tq = parse_rational(*cfg.t_text);
  if (tq.get_den() != 1 || sgn(tq) < 0) throw InvalidSequence("t must be a nonnegative integer");
  const Integer t = tq.get_num();
  if (cfg.backend == "float") {
    if (!t.fits_ulong_p()) throw InvalidSequence("t too large for the float backend");
    const std::uint64_t tu = t.get_ui();
    return cfg.precision == "extended" ? float_eval_cmd<long double>(seq, cfg, tu)
                                       : float_eval_cmd<double>(seq, cfg, tu);
  }
  WaveOptions opts;
  opts.threads = cfg.threads;
  const Integer value = evaluate_waves(all_waves(seq, opts), t);
  if (cfg.output == "json") {
    nlohmann::json doc{{"sequence", seq}, {"backend", "exact"}, {"t", t.get_str()}, {"value", value.get_str()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

int cmd_bench(const CliConfig& cfg) {
  BenchOptions opts;
  opts.max_k = cfg.bench_k;
  opts.backend = cfg.backend == "float" ? Backend::floating : Backend::exact;
  opts.t = cfg.bench_t;
  opts.time_limit = cfg.time_limit_secs;
  opts.threads = cfg.threads;
  const bool json = cfg.output == "json";
  if (!json) {
    std::cout << std::setw(5) << "k" << std::setw(12) << "seconds" << std::setw(8) << "waves"
              << "  d(" << cfg.bench_t << "; 1..k)\n";
    opts.on_row = [](const BenchRow& r) {
      std::cout << std::setw(5) << r.k << std::setw(12) << std::fixed << std::setprecision(4) << r.seconds
                << std::setw(8) << r.wave_count << "  " << (r.timed_out ? "TIMEOUT" : r.value) << std::endl;
    };
  }
  const auto rows = run_bench(opts);
  if (json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) {
      out.push_back({{"k", r.k},
                     {"seconds", r.seconds},
                     {"waves", r.wave_count},
                     {"status", r.timed_out ? "TIMEOUT" : "OK"},
                     {"value", r.value}});
    }
    std::cout << nlohmann::json{{"backend", cfg.backend}, {"t", cfg.bench_t}, {"rows", out}}.dump(2) << "\n";
  } else {
    double total = 0;
    for (const auto& r : rows) total += r.seconds;
    std::cout << "total " << std::fixed << std::setprecision(3) << total << " s\n";
  }
  return 0;
}

int cmd_selftest(const CliConfig& cfg) {
  SelftestOptions opts;
  opts.random_sequences = cfg.random_sequences;
  opts.seed = cfg.seed;
  opts.threads = cfg.threads;
  if (cfg.inject_fault == "cyclotomic") {
    opts.phi_provider = [](unsigned n) {
      Poly p = cyclotomic_poly(n);
      return n == 12 ? p + Poly::monomial(1, 1) : p;
    };
  } else if (!cfg.inject_fault.empty()) {
    throw InvalidSequence("unknown fault '" + cfg.inject_fault + "'");
  }
  const auto report = run_selftest(opts);
  print_report(std::cout, report);
  if (!report.passed()) {
    std::cerr << "first failure: " << report.first_failure() << "\n";
    return kExitSelftest;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylvester denumerants d(t; a) as sums of Sylvester waves"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* waves = app.add_subcommand("waves", "print every Sylvester wave W_f(t; a)");
  add_sequence_options(waves, cfg);
  waves->add_option("--combine-limit", cfg.combine_limit, "largest period for the combined JSON quasi-polynomial");

  auto* eval = app.add_subcommand("eval", "evaluate d(t; a)");
  add_sequence_options(eval, cfg);
  eval->add_option("-t", cfg.t_text, "nonnegative integer t")->required();

  auto* bench = app.add_subcommand("bench", "time d(t; 1..k) for k = 2..K");
  bench->add_option("-k,--upto", cfg.bench_k, "largest k")->required();
  bench->add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  bench->add_option("--output", cfg.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  bench->add_option("-t", cfg.bench_t, "evaluation point");
  bench->add_option("--time-limit", cfg.time_limit_secs, "seconds allowed per row")->check(CLI::PositiveNumber);
  bench->add_option("--threads", cfg.threads, "worker threads (0 = logical processors)");

  auto* selftest = app.add_subcommand("selftest", "run the built-in consistency checks");
  selftest->add_option("--random", cfg.random_sequences, "number of random oracle sequences");
  selftest->add_option("--seed", cfg.seed, "random seed");
  selftest->add_option("--threads", cfg.threads, "worker threads (0 = logical processors)");
  selftest->add_option("--inject-fault", cfg.inject_fault, "corrupt a component (testing only)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*waves) return cmd_waves(cfg);
    if (*eval) return cmd_eval(cfg);
    if (*bench) return cmd_bench(cfg);
    if (*selftest) return cmd_selftest(cfg);
  } catch (const InvalidSequence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
