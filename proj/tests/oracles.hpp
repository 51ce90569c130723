#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline int cycle_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

/// counts[q] = number of permutations of p objects with exactly q cycles.
inline std::vector<std::uint64_t> permutation_cycle_counts(int p) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(p) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++counts[static_cast<std::size_t>(cycle_count(perm))];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace oracle
