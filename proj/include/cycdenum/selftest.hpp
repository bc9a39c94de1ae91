#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cycdenum/poly.hpp"

namespace cycdenum {

struct SelftestOptions {
  /// Source of Phi_n for the product identity check; tests swap in a
  /// corrupted table here.
  std::function<Poly(unsigned)> phi_provider;
  unsigned random_sequences = 25;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

struct SelftestSection {
  std::string name;
  std::size_t checks = 0;
  bool passed = true;
  std::string failure;
};

struct SelftestReport {
  std::vector<SelftestSection> sections;

  bool passed() const;
  std::size_t total_checks() const;
  /// Empty when everything passed.
  std::string first_failure() const;
};

/// Golden (1,3,6) waves, the cyclotomic product identity for n <= 200, the
/// exp/log round trip, and random sequences against the DP oracle.
SelftestReport run_selftest(const SelftestOptions& options = {});

void print_report(std::ostream& os, const SelftestReport& report);

}  // namespace cycdenum
