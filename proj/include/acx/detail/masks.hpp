#pragma once

#include <bit>
#include <cstdint>

namespace acx::detail {

/// Sign (+1/-1) of concatenating two disjoint sorted generator sets a, b into ascending order.
inline int merge_sign(uint32_t a, uint32_t b) {
  int inversions = 0;
  while (b != 0) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (y + 1));
  }
  return (inversions & 1) != 0 ? -1 : 1;
}

inline int bit_count(uint32_t m) { return std::popcount(m); }

}  // namespace acx::detail
