#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace shortlist {

using Rng = std::mt19937_64;

// std::shuffle and the <random> distributions are implementation defined, so
// seeded results would differ across standard libraries. Every stochastic
// draw in this project goes through the helpers below instead.

inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
  // Plain modulo draw. The bias is on the order of bound / 2^64, which is
  // far below anything the statistical tests here can resolve.
  return rng() % bound;
}

inline double rng_unit(Rng& rng) {
  // 53 uniform mantissa bits in [0, 1).
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

template <typename T>
void shuffle_items(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace shortlist
