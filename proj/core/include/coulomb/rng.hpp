#pragma once

#include <cstdint>
#include <random>

#include "coulomb/rational.hpp"

namespace coulomb {

// Seeded generator with platform-independent output.  mt19937_64 output is
// pinned by the standard; the bounded draw below avoids the
// library-dependent std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [lo, hi], inclusive.  Rejection sampling, no bias.
  Int uniform(Int lo, Int hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<Int>(gen_());  // full 64-bit span
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return lo + static_cast<Int>(r % range);
  }

  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace coulomb
