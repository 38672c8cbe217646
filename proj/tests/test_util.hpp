#pragma once

/* Independent reference implementations for the tests. These deliberately
 * avoid the library's own machinery: containment enumerates index subsets and
 * compares relative order pairwise, and the Mobius reference recurses on the
 * textbook definition with nothing shared with Downset. Slow but obviously
 * correct on the sizes the tests use. */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "muposet/permutation.hpp"

namespace testutil {

inline bool same_relative_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

inline bool contains_naive(const muposet::Permutation& pattern,
                           const muposet::Permutation& host) {
  const int m = pattern.size();
  const int n = host.size();
  if (m > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  std::sort(pick.begin(), pick.end(), std::greater<int>());
  // iterate over all m-subsets of positions via prev_permutation on the mask
  do {
    std::vector<int> sub;
    sub.reserve(m);
    for (int i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(host.at(i + 1));
    if (same_relative_order(sub, pattern.values())) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// mu(lower, upper) straight from the definition: sum over every shorter
// permutation that fits strictly between. Memoized on the string pair.
inline long long mobius_ref(const muposet::Permutation& lower,
                            const muposet::Permutation& upper) {
  using muposet::Permutation;
  static std::map<std::pair<std::string, std::string>, long long> memo;
  if (!contains_naive(lower, upper)) return 0;
  if (lower == upper) return 1;
  const auto key = std::make_pair(lower.str(), upper.str());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  long long total = mobius_ref(lower, lower);
  for (int len = lower.size() + 1; len < upper.size(); ++len) {
    std::vector<int> word(len);
    for (int i = 0; i < len; ++i) word[i] = i + 1;
    do {
      Permutation z{word};
      if (contains_naive(lower, z) && contains_naive(z, upper))
        total += mobius_ref(lower, z);
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return memo[key] = -total;
}

inline long long mobius_top_ref(const muposet::Permutation& pi) {
  return mobius_ref(muposet::Permutation::identity(1), pi);
}

}  // namespace testutil
