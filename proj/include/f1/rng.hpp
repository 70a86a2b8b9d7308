#pragma once

#include <cstdint>
#include <random>

#include "f1/nt.hpp"

namespace f1 {

/// Deterministic generator for all sampling checks. The bounded draw is
/// implemented here (rejection on the top range) so that a given seed yields
/// the same stream regardless of the standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive.
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do { v = eng_(); } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  bool flip() { return (eng_() & 1u) != 0; }

  /// Uniform rational num/den with |num| <= max_num, 1 <= den <= max_den.
  Rat rational(long max_num, long max_den) {
    return make_rat(Int(uniform(-max_num, max_num)), Int(uniform(1, max_den)));
  }

private:
  std::mt19937_64 eng_;
};

} // namespace f1
