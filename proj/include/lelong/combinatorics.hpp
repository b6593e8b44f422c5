#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace lelong {

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early and returns true as soon as fn returns true.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace lelong
