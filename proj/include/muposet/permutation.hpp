#pragma once

/* One-line permutations together with the order, descent and adjacency
 * statistics the rest of the library is built on. Positions and values are
 * 1-based in every contract here. An "adjacency" is a pair of consecutive
 * positions holding consecutive values; unqualified it means increasing. */

#include <string>
#include <string_view>
#include <vector>

#include "muposet/error.hpp"

namespace muposet {

class Permutation {
public:
  // Validates that `values` is a rearrangement of 1..n; throws invalid_word.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  // Accepts a digit string ("24513") or a comma/space separated list
  // ("2,4,6,7,9,12"). Values are taken literally, not standardized.
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int at(int position) const;  // 1-based, bounds-checked
  const std::vector<int>& values() const noexcept { return values_; }

  // Digit string for n <= 9, comma-separated otherwise (inverse of parse).
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> values_;
};

enum class Direction { increasing, decreasing };

struct AdjacencyInfo {
  int position;  // 1-based position of the initial letter of the pair
  int value;     // value of the initial letter
  Direction direction;
  bool operator==(const AdjacencyInfo&) const = default;
};

// Relabels a duplicate-free word to the permutation with the same relative
// order, e.g. (2,1,4) -> 213. Throws invalid_word on duplicates or emptiness.
Permutation standardize(const std::vector<int>& word);

// Classical pattern containment: some subsequence of `host` standardizes to
// `pattern`.
bool contains(const Permutation& pattern, const Permutation& host);

// Number of subsequences of `host` that standardize to `pattern`. Exact;
// throws overflow rather than wrapping.
long long occurrence_count(const Permutation& pattern, const Permutation& host);

// Positions i with pi_i > pi_{i+1}, ascending.
std::vector<int> descent_positions(const Permutation& pi);
int descent_count(const Permutation& pi);

// All adjacencies in the given direction, in position order. A maximal run of
// k consecutive values contributes k-1 entries.
std::vector<AdjacencyInfo> adjacencies(const Permutation& pi,
                                       Direction direction = Direction::increasing);
int adjacency_count(const Permutation& pi,
                    Direction direction = Direction::increasing);

// Three consecutive positions holding three consecutive values.
bool has_triple_adjacency(const Permutation& pi,
                          Direction direction = Direction::increasing);

// Length of the longest run of consecutive positions holding consecutive
// values in the given direction (>= 1 for any nonempty permutation).
int longest_adjacency_run(const Permutation& pi, Direction direction);

// Remove the letter with the given value / at the given position, then close
// the gaps. The result is one letter shorter; deleting from a length-1
// permutation is an error.
Permutation delete_value(const Permutation& pi, int value);
Permutation delete_position(const Permutation& pi, int position);

// alpha followed by beta with beta's letters shifted above alpha's.
Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

// True when some proper prefix of length p uses exactly the values 1..p.
bool is_decomposable(const Permutation& pi);

// Avoids both 3142 and 2413.
bool is_separable(const Permutation& pi);

// Both or neither permutation begins with the letter 1.
bool related(const Permutation& sigma, const Permutation& pi);

// make_M(n) = 2 4 .. 2n 1 3 .. 2n-1, make_W(n) = 1 3 .. 2n-1 2 4 .. 2n.
// Defined for n >= 2; these have one descent and no adjacencies.
Permutation make_M(int n);
Permutation make_W(int n);

// At most one descent.
bool in_P01(const Permutation& pi);

}  // namespace muposet
