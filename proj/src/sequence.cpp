#include "cycdenum/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cycdenum {

void validate_sequence(std::span<const unsigned> seq) {
  if (seq.empty()) throw InvalidSequence("sequence a must be nonempty");
  for (unsigned a : seq) {
    if (a == 0) throw InvalidSequence("entries of a must be positive");
  }
  Sequence sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidSequence("entries of a must be distinct");
  }
  unsigned g = 0;
  for (unsigned a : seq) g = std::gcd(g, a);
  if (g != 1) throw InvalidSequence("gcd(a) must be 1");
}

Sequence upto(unsigned k) {
  Sequence s(k);
  std::iota(s.begin(), s.end(), 1u);
  return s;
}

Sequence parse_sequence(const std::string& csv) {
  Sequence out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidSequence("empty entry in sequence '" + csv + "'");
    item = item.substr(b, e - b + 1);
    if (item[0] == '-') throw InvalidSequence("entries of a must be positive");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw InvalidSequence("malformed entry '" + item + "' in sequence");
    }
    if (used != item.size() || v > 0xFFFFFFFFul) throw InvalidSequence("malformed entry '" + item + "' in sequence");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

Sequence random_sequence(std::mt19937_64& rng, unsigned min_len, unsigned max_len, unsigned max_entry) {
  if (min_len == 0 || min_len > max_len || max_len > max_entry) {
    throw std::invalid_argument("random_sequence: bad length or entry bounds");
  }
  std::uniform_int_distribution<unsigned> len_dist(min_len, max_len);
  Sequence pool = upto(max_entry);
  for (;;) {
    const unsigned n = len_dist(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    Sequence s(pool.begin(), pool.begin() + n);
    unsigned g = 0;
    for (unsigned a : s) g = std::gcd(g, a);
    if (g == 1) return s;
  }
}

}  // namespace cycdenum
