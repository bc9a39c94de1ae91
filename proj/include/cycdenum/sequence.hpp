#pragma once

#include <chrono>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdenum {

using Sequence = std::vector<unsigned>;

/// Raised for inputs that violate the denumerant preconditions.
class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonempty, positive, distinct, gcd 1. Throws InvalidSequence naming the
/// first violated condition.
void validate_sequence(std::span<const unsigned> seq);

/// (1, 2, ..., k)
Sequence upto(unsigned k);

Sequence parse_sequence(const std::string& csv);

/// Uniform random valid sequence: length in [min_len, max_len], distinct
/// entries in [1, max_entry], gcd 1 (redrawn until valid).
Sequence random_sequence(std::mt19937_64& rng, unsigned min_len, unsigned max_len, unsigned max_entry);

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("time limit exceeded") {}
};

/// Cooperative time limit checked between units of work.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline after(std::chrono::duration<double> d) {
    return {std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(d)};
  }
  bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
  void check() const {
    if (expired()) throw Timeout();
  }
};

}  // namespace cycdenum
