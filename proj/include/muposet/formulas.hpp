#pragma once

/* Closed-form and conjectured evaluations of Mobius values on the one-descent
 * classes: the thirteen-case closed form for principal values, the
 * containment classifier for adjacency-free one-descent hosts, and the two
 * conjectured interval formulas with their supporting statistics. */

#include <string>
#include <vector>

#include "muposet/permutation.hpp"

namespace muposet {

// C(n, k) with C(n, 0) = 1 for n >= 0 and 0 whenever n < 0, k < 0 or k > n.
// Throws overflow if the exact value exceeds the widest native integer.
long long binomial(long long n, long long k);

enum class Theorem4Case {
  short_length,  // lengths 1 and 2, outside the case analysis
  part1,         // begins with 12 or ends with (n-1)n
  part2,         // triple adjacency
  part3,         // more than two adjacencies
  part4a,        // two adjacencies, first value above second
  part4b,        // two adjacencies, first value below second
  part5a,        // one adjacency before the descent, pi_1 != 1
  part5b,        // one adjacency before the descent, pi_1 = 1
  part5c,        // one adjacency after the descent, pi_n != n
  part5d,        // one adjacency after the descent, pi_n = n
  part6a,        // no adjacencies, n even, pi_1 = 1
  part6b,        // no adjacencies, n even, pi_1 = 2
  part6c,        // no adjacencies, n odd
};

const char* to_string(Theorem4Case c);

struct Theorem4Result {
  long long value;
  Theorem4Case case_label;
  bool operator==(const Theorem4Result&) const = default;
};

// Closed form for mu(1, pi) on permutations with at most one descent.
// Nonzero values are positive exactly when the length is odd.
Theorem4Result theorem4(const Permutation& pi);

// Containment classifier for an adjacency-free one-descent host pi: a
// one-descent sigma with at most two adjacencies and |sigma| < |pi| is
// contained unless it falls in one of three exception classes (length n-1
// with two adjacencies; length n-1 with one adjacency, unrelated; length n-2
// with two adjacencies, unrelated). Preconditions are enforced (out_of_class).
bool lemma3_contains(const Permutation& pi, const Permutation& sigma);

enum class TargetShape { M, W };

enum class Conj1Branch { separable_m, separable_w, non_separable };

const char* to_string(Conj1Branch b);

struct Conj1Result {
  long long value;
  Conj1Branch branch;
  int m;                   // |sigma|
  int adjacency_count;     // increasing adjacencies of sigma
  bool related_to_target;
  bool operator==(const Conj1Result&) const = default;
};

// Conjectured mu(sigma, target) for a one-descent sigma contained in
// make_M(n) or make_W(n). Positive exactly when |sigma| is even.
Conj1Result conjecture1(const Permutation& sigma, TargetShape shape, int n);

// Shifted binomial used by the second conjectured formula. Domain error when
// k is outside [0, s).
long long chat(long long alpha, long long beta, long long k, long long s);

// Statistics of a host pi (with lower-bound length parameter m) feeding the
// second conjectured formula. Field names follow the record contract; all
// sequences are as they stand after the trimming pass, with the pre-trim
// split kept alongside.
struct ConjTwoStats {
  int a = 0;                  // increasing adjacencies of pi
  int n_hat = 0;              // n - 1 if pi ends with its largest letter, else n
  std::vector<int> A;         // adjacency values, ascending, with both phantoms
  std::vector<int> J_hat;     // floor((A[k+1] - A[k] - 2) / 2) for each gap
  std::vector<int> j_a_pre;   // gaps between same-side entries, pre-trim
  std::vector<int> j_b_pre;   // gaps between opposite-side entries, pre-trim
  std::vector<int> j_a;       // post-trim, zeros removed, ascending
  std::vector<int> j_b;       // post-trim, zeros removed, descending
  int epsilon = 0;
  int alpha = 0;              // |j_a| after max-removal, before zero-removal
  int beta = 0;               // |j_b| after max-removal, before zero-removal
  int s = 0;                  // sum of J_hat
  int t = 0;
  int lambda = 0;             // ceil(n_hat/2) + m - ceil(5a/2) + beta - t
  int sigma = 0;              // 2m - 2a + beta
  bool operator==(const ConjTwoStats&) const = default;
};

// Computes the statistics record; requires at most one descent.
ConjTwoStats conjecture2_stats(int m, const Permutation& pi);

struct Conj2Evaluation {
  long long value = 0;           // signed conjectured mu(make_M(m), pi)
  long long value_alt_beta = 0;  // same, with beta read after zero-removal
  bool zero_rule = false;        // begins 12, ends (n-1)n, or triple adjacency
  ConjTwoStats stats;
};

// Full evaluation, exposing the alternative beta reading for verification.
Conj2Evaluation conjecture2_evaluate(int m, const Permutation& pi);

// Conjectured mu(make_M(m), pi) for a host with at most one descent.
// Positive exactly when |pi| is even. Requires m >= 2.
long long conjecture2(int m, const Permutation& pi);

}  // namespace muposet
