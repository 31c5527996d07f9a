#pragma once

#include <bit>
#include <cstdint>
#include <limits>

namespace xtr {

/// C(n, k), saturating at UINT64_MAX.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Next mask with the same popcount (Gosper). Masks of fixed weight come out
/// in increasing numeric order, i.e. colex order of the subsets.
constexpr std::uint64_t next_combination(std::uint64_t mask) {
  const std::uint64_t c = mask & (~mask + 1);
  const std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

/// The `rank`-th k-subset of {0..63} in colex order, as a mask.
constexpr std::uint64_t unrank_combination(std::uint64_t rank, unsigned k) {
  std::uint64_t mask = 0;
  for (unsigned i = k; i >= 1; --i) {
    std::uint64_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    rank -= binomial(c, i);
    mask |= std::uint64_t{1} << c;
  }
  return mask;
}

inline bool is_power_of_two(std::uint64_t v) { return v && !(v & (v - 1)); }
inline int log2_exact(std::uint64_t v) { return std::countr_zero(v); }

}  // namespace xtr
