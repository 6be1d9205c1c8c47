#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace peelkit {

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
/// fn returns false to stop early; the function then returns false too.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

inline int popcount(std::uint64_t mask) { return __builtin_popcountll(mask); }

}  // namespace peelkit
