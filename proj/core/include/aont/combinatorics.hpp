#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace aont {

/// Advances a sorted k-subset of {0..n-1} to its lexicographic successor.
/// Returns false after the last subset.
inline bool next_combination(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when f returns false. Returns false if stopped early.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  do {
    if (!f(static_cast<const std::vector<int>&>(subset))) return false;
  } while (next_combination(subset, n));
  return true;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// v^e, saturating at UINT64_MAX.
inline std::uint64_t checked_pow(std::uint64_t v, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v != 0 && r > UINT64_MAX / v) return UINT64_MAX;
    r *= v;
  }
  return r;
}

}  // namespace aont
