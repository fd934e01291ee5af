#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace kstab::detail {

// Calls f(span of k sorted indices) for every k-subset of {0..n-1}, in
// lexicographic order. f returns false to stop early.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kstab::detail
