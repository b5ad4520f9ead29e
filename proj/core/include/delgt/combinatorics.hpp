#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace delgt {

/// Binomial coefficient, saturating at uint64 max instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t factor = n - r + i;
    if (result > kMax / factor) return kMax;
    result = result * factor / i;
  }
  return result;
}

/// Calls fn once per size-r subset of {0,...,n-1}, in lexicographic order.
/// fn returns false to stop early; the function returns false iff stopped.
/// r == 0 yields exactly one call with the empty subset.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    // advance to the next combination
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == n - r + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace delgt
