#pragma once

#include <vector>

#include "muposet/permutation.hpp"
#include "muposet/report.hpp"

namespace muposet {

// Enumeration helpers, each returning permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> one_descent_permutations(int n);
std::vector<Permutation> at_most_one_descent_permutations(int n);

struct VerifyOptions {
  int jobs = 0;  // worker threads; 0 means use the hardware count
};

// Each campaign compares a closed form against the recursive Mobius values
// (or, for the structural sweeps, against direct containment checks) over an
// exhaustive range, and reports every disagreement. Reports are deterministic
// for fixed bounds apart from runtime_ms; jobs only changes the wall time.

// Closed form for at most one descent, lengths 1..max_n. max_n in [3, 10].
VerificationReport verify_theorem4(int max_n, const VerifyOptions& options = {});

// Interval formula from one-descent patterns up to make_M(n) and make_W(n),
// for n in 2..max_n. max_n in [2, 7].
VerificationReport verify_conjecture1(int max_n, const VerifyOptions& options = {});

// Interval formula from make_M(m) up to hosts with at most one descent, for
// m in 2..max_m and hosts of length up to max_n. Requires max_m >= 2 and
// 2*max_m <= max_n <= 14.
VerificationReport verify_conjecture2(int max_m, int max_n,
                                      const VerifyOptions& options = {});

// Structural sweeps: vanishing under monotone runs, containment description
// for adjacency-free one-descent hosts, deletion recurrences, and the
// forbidden-pattern basis for at most one descent. max_n in [3, 9].
VerificationReport verify_lemmas(int max_n, const VerifyOptions& options = {});

}  // namespace muposet
