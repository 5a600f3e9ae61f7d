#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace covlat {

// Subsets of the ground set (and of the block index range) are 64-bit masks
// over dense indices. Bit i is element/block i in canonical (input) order.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline bool contains(Mask m, int i) { return (m >> i) & Mask{1}; }

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

template <typename F>
void for_each_element(Mask m, F f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::vector<int> elements_of(Mask m);

// Dictionary order on ascending element lists: {} < {0} < {0,1} < {1} < {2}.
bool set_lex_less(Mask a, Mask b);

}  // namespace covlat
