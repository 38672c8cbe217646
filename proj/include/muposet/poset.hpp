#pragma once

/* The pattern-containment order and its Mobius function, computed by direct
 * recursion over intervals. A Downset materializes every pattern of a root
 * permutation by breadth-first single-letter deletion; containment between
 * members is then reachability in the deletion graph, kept as bitsets so the
 * recursion never repeats a containment test. */

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "muposet/permutation.hpp"

namespace muposet {

class Downset {
public:
  // Hosts longer than this are refused: the set of patterns of an arbitrary
  // permutation grows like 2^n, so the recursion would not stay bounded.
  static constexpr int max_root_length = 14;

  // Builds the full pattern closure of `root`; throws too_large when the root
  // exceeds max_root_length.
  explicit Downset(Permutation root);

  const Permutation& root() const noexcept { return members_[0]; }
  std::size_t size() const noexcept { return members_.size(); }

  // Every pattern of the root, root first, in order of decreasing length.
  const std::vector<Permutation>& members() const noexcept { return members_; }

  // members()[len] sorted lexicographically; index 0 is empty padding.
  std::vector<std::vector<Permutation>> members_by_length() const;

  bool has_member(const Permutation& p) const;

  // mu(lower, root); 0 when lower is not a member.
  long long mobius_from(const Permutation& lower) const;

  // mu(lower, member) for every member, aligned with members(); one pass over
  // the whole downset. Entries outside the interval are 0.
  std::vector<long long> mobius_vector_from(const Permutation& lower) const;

  // All members containing `lower` (the interval [lower, root]), in order of
  // increasing length then lexicographic. Empty when lower is not a member.
  std::vector<Permutation> interval_from(const Permutation& lower) const;

private:
  int find(const Permutation& p) const;  // member index or -1
  bool reach_bit(int from, int to) const;

  std::vector<Permutation> members_;
  std::vector<std::vector<int>> children_;       // one-letter deletions
  std::unordered_map<std::uint64_t, int> index_;  // packed word -> member index
  std::vector<std::uint64_t> reach_;              // size() x words_ bit matrix
  std::size_t words_ = 0;
};

Downset downset(const Permutation& pi);

// mu(lower, upper) in the pattern poset: 1 on equality, 0 without containment,
// otherwise defined by mu(lower, upper) = -sum of mu over [lower, upper).
// Hosts longer than Downset::max_root_length are refused (too_large).
long long mobius(const Permutation& lower, const Permutation& upper);

// mu(1, pi), the principal Mobius value.
long long mobius_top(const Permutation& pi);

std::vector<Permutation> interval(const Permutation& lower, const Permutation& upper);

}  // namespace muposet
