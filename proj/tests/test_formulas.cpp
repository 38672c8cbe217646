#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "muposet/formulas.hpp"
#include "muposet/poset.hpp"
#include "muposet/verify.hpp"
#include "test_util.hpp"

using muposet::Permutation;
using muposet::Theorem4Case;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

const Permutation rank20_host = Permutation::parse(
    "2,4,6,7,9,12,14,16,18,21,23,24,26,28,1,3,5,8,10,11,13,15,17,19,20,22,25,27");
}

TEST_CASE("binomial") {
  CHECK(muposet::binomial(0, 0) == 1);
  CHECK(muposet::binomial(5, 2) == 10);
  CHECK(muposet::binomial(5, 0) == 1);
  CHECK(muposet::binomial(5, 5) == 1);
  CHECK(muposet::binomial(3, 5) == 0);
  CHECK(muposet::binomial(5, -1) == 0);
  CHECK(muposet::binomial(-1, 0) == 0);
  CHECK(muposet::binomial(52, 5) == 2598960);
  CHECK(muposet::binomial(66, 33) == 7219428434016265740LL);
  CHECK_THROWS_AS(muposet::binomial(67, 33), muposet::Error);
  CHECK_THROWS_AS(muposet::binomial(70, 35), muposet::Error);
}

TEST_CASE("closed form on the short lengths") {
  CHECK(muposet::theorem4(P("1")) ==
        muposet::Theorem4Result{1, Theorem4Case::short_length});
  CHECK(muposet::theorem4(P("12")) ==
        muposet::Theorem4Result{-1, Theorem4Case::short_length});
  CHECK(muposet::theorem4(P("21")) ==
        muposet::Theorem4Result{-1, Theorem4Case::short_length});
}

TEST_CASE("closed form case dispatch on representatives") {
  auto check = [](const char* pi, long long value, Theorem4Case label) {
    const auto got = muposet::theorem4(P(pi));
    CHECK(got.value == value);
    CHECK(got.case_label == label);
  };
  check("123", 0, Theorem4Case::part1);      // begins with 12
  check("1234", 0, Theorem4Case::part1);
  check("23145", 0, Theorem4Case::part1);    // ends with 45
  check("34512", 0, Theorem4Case::part2);    // triple adjacency
  check("34781256", 0, Theorem4Case::part3); // four separated adjacencies
  check("34125", 1, Theorem4Case::part4a);
  check("14523", 1, Theorem4Case::part4a);
  check("3412", -1, Theorem4Case::part4a);
  check("235614", 0, Theorem4Case::part4b);
  check("24513", 2, Theorem4Case::part5a);
  check("245136", -2, Theorem4Case::part5a);
  check("23514", 1, Theorem4Case::part5a);
  check("13425", 1, Theorem4Case::part5b);
  check("135624", -2, Theorem4Case::part5b);
  check("1423", -1, Theorem4Case::part5c);
  check("146235", -2, Theorem4Case::part5c);
  check("251346", -1, Theorem4Case::part5d);
  check("1324", -1, Theorem4Case::part6a);
  check("135246", -3, Theorem4Case::part6a);
  check("2413", -3, Theorem4Case::part6b);
  check("246135", -6, Theorem4Case::part6b);
  check("132", 1, Theorem4Case::part6c);
  check("13524", 3, Theorem4Case::part6c);
  check("24135", 3, Theorem4Case::part6c);
}

TEST_CASE("closed form rejects two descents") {
  CHECK_THROWS_AS(muposet::theorem4(P("321")), muposet::Error);
  CHECK_THROWS_AS(muposet::theorem4(P("2143")), muposet::Error);
  try {
    muposet::theorem4(P("3142"));
    FAIL("expected out_of_class");
  } catch (const muposet::Error& e) {
    CHECK(e.kind() == muposet::ErrorKind::out_of_class);
  }
}

TEST_CASE("closed form equals the recursive value through length 7") {
  for (int n = 1; n <= 7; ++n)
    for (const Permutation& pi : muposet::at_most_one_descent_permutations(n)) {
      const auto got = muposet::theorem4(pi);
      const long long want = muposet::mobius_top(pi);
      CHECK_MESSAGE(got.value == want, pi.str(), " labeled ",
                    muposet::to_string(got.case_label));
    }
}

TEST_CASE("nonzero closed-form values are positive exactly at odd lengths") {
  for (int n = 3; n <= 7; ++n)
    for (const Permutation& pi : muposet::at_most_one_descent_permutations(n)) {
      const long long v = muposet::theorem4(pi).value;
      if (v != 0) CHECK((v > 0) == (n % 2 == 1));
    }
}

TEST_CASE("containment classifier enforces its preconditions") {
  // host must be one-descent and adjacency-free
  CHECK_THROWS_AS(muposet::lemma3_contains(P("245136"), P("231")), muposet::Error);
  CHECK_THROWS_AS(muposet::lemma3_contains(P("12345"), P("231")), muposet::Error);
  // sigma must have one descent and at most two adjacencies, shorter than host
  CHECK_THROWS_AS(muposet::lemma3_contains(P("135246"), P("321")), muposet::Error);
  CHECK_THROWS_AS(muposet::lemma3_contains(P("135246"), P("1234")), muposet::Error);
  CHECK_THROWS_AS(muposet::lemma3_contains(P("135246"), P("23451")), muposet::Error);
  CHECK_THROWS_AS(muposet::lemma3_contains(P("135246"), P("246135")), muposet::Error);
}

TEST_CASE("containment classifier on the 135246 host") {
  const Permutation host = P("135246");
  // plainly contained members
  for (const char* s : {"24135", "13245", "13524", "2413", "1324", "231"})
    CHECK(muposet::lemma3_contains(host, P(s)));
  // length n-1 with two adjacencies
  for (const char* s : {"12354", "41235", "23415", "13452"})
    CHECK(!muposet::lemma3_contains(host, P(s)));
  // length n-1 with one adjacency, unrelated
  for (const char* s : {"35124", "23514", "25134", "24513"})
    CHECK(!muposet::lemma3_contains(host, P(s)));
  // length n-2 with two adjacencies, unrelated
  for (const char* s : {"4123", "3412", "2341"})
    CHECK(!muposet::lemma3_contains(host, P(s)));

  // the classifier agrees with actual containment over every eligible sigma
  for (int m = 2; m <= 5; ++m)
    for (const Permutation& sigma : muposet::one_descent_permutations(m)) {
      if (muposet::adjacency_count(sigma) > 2) continue;
      CHECK_MESSAGE(muposet::lemma3_contains(host, sigma) ==
                        muposet::contains(sigma, host),
                    sigma.str());
    }
}

TEST_CASE("interval formula below the even targets") {
  using muposet::Conj1Branch;
  using muposet::TargetShape;

  const auto m132 = muposet::conjecture1(P("132"), TargetShape::M, 3);
  CHECK(m132.value == -4);
  CHECK(m132.branch == Conj1Branch::separable_m);

  const auto w132 = muposet::conjecture1(P("132"), TargetShape::W, 3);
  CHECK(w132.value == -4);
  CHECK(w132.branch == Conj1Branch::separable_w);

  const auto ns = muposet::conjecture1(P("2413"), TargetShape::M, 3);
  CHECK(ns.value == 5);
  CHECK(ns.branch == Conj1Branch::non_separable);
  CHECK(ns.related_to_target);

  const auto small = muposet::conjecture1(P("21"), TargetShape::M, 2);
  CHECK(small.value == 3);
  CHECK(small.value == muposet::mobius(P("21"), muposet::make_M(2)));
}

TEST_CASE("interval formula error contract") {
  using muposet::TargetShape;
  CHECK_THROWS_AS(muposet::conjecture1(P("132"), TargetShape::M, 1), muposet::Error);
  CHECK_THROWS_AS(muposet::conjecture1(P("123"), TargetShape::M, 3), muposet::Error);
  CHECK_THROWS_AS(muposet::conjecture1(P("321"), TargetShape::M, 3), muposet::Error);
  try {
    muposet::conjecture1(P("3412"), TargetShape::M, 2);
    FAIL("expected not_contained");
  } catch (const muposet::Error& e) {
    CHECK(e.kind() == muposet::ErrorKind::not_contained);
  }
}

TEST_CASE("interval formula matches the recursion below both length-4 targets") {
  using muposet::TargetShape;
  for (const auto& [shape, target] :
       {std::pair{TargetShape::M, muposet::make_M(2)},
        std::pair{TargetShape::W, muposet::make_W(2)}}) {
    const muposet::Downset ds(target);
    for (const Permutation& sigma : ds.members()) {
      if (sigma == target || muposet::descent_count(sigma) != 1) continue;
      CHECK(muposet::conjecture1(sigma, shape, 2).value ==
            ds.mobius_from(sigma));
    }
  }
}

TEST_CASE("shifted binomial") {
  CHECK(muposet::chat(9, 2, 0, 9) == 36);
  CHECK(muposet::chat(8, 0, 2, 10) == 1);
  CHECK(muposet::chat(5, 7, 0, 4) == 0);
  CHECK(muposet::chat(9, 2, 5, 9) == 1);  // upper branch: C(9-8+1, 2)
  CHECK(muposet::chat(9, 2, 4, 9) == 0);  // last lower-branch k: C(1, 2)
  CHECK_THROWS_AS(muposet::chat(1, 1, 3, 3), muposet::Error);
  CHECK_THROWS_AS(muposet::chat(1, 1, -1, 5), muposet::Error);
  try {
    muposet::chat(1, 1, 5, 5);
    FAIL("expected domain");
  } catch (const muposet::Error& e) {
    CHECK(e.kind() == muposet::ErrorKind::domain);
  }
}

TEST_CASE("statistics record for the rank-20 host") {
  const auto st = muposet::conjecture2_stats(4, rank20_host);
  CHECK(st.a == 4);
  CHECK(st.n_hat == 28);
  CHECK(st.A == std::vector<int>{-1, 6, 10, 19, 23, 29});
  CHECK(st.J_hat == std::vector<int>{2, 1, 3, 1, 2});
  CHECK(st.j_a_pre == std::vector<int>{2, 3});
  CHECK(st.j_b_pre == std::vector<int>{1, 1, 2});
  CHECK(st.j_a == std::vector<int>{2});
  CHECK(st.j_b == std::vector<int>{2, 1, 1});
  CHECK(st.epsilon == 1);
  CHECK(st.alpha == 1);
  CHECK(st.beta == 3);
  CHECK(st.s == 9);
  CHECK(st.t == 0);
  CHECK(st.lambda == 11);
  CHECK(st.sigma == 3);
}

TEST_CASE("statistics record for an adjacency-free host") {
  const auto st = muposet::conjecture2_stats(2, P("246135"));
  CHECK(st.a == 0);
  CHECK(st.n_hat == 6);
  CHECK(st.A == std::vector<int>{-1, 7});
  CHECK(st.J_hat == std::vector<int>{3});
  CHECK(st.j_a_pre.empty());
  CHECK(st.j_b_pre == std::vector<int>{3});
  CHECK(st.j_a.empty());
  CHECK(st.j_b.empty());  // the only element was the largest, removed by trim
  CHECK(st.epsilon == 0);
  CHECK(st.beta == 0);
  CHECK(st.s == 3);
  CHECK(st.t == 0);
  CHECK(st.lambda == 5);
  CHECK(st.sigma == 4);
}

TEST_CASE("the t statistic") {
  CHECK(muposet::conjecture2_stats(2, P("1324")).t == 1);   // starts 1, even, ends n
  CHECK(muposet::conjecture2_stats(2, P("13524")).t == 1);  // starts 1, odd, open end
  CHECK(muposet::conjecture2_stats(2, P("135246")).t == 1); // starts 1, even, ends n
  CHECK(muposet::conjecture2_stats(2, P("2413")).t == 0);   // does not start with 1
  CHECK(muposet::conjecture2_stats(2, P("124635")).t == 0); // even but open end
}

TEST_CASE("interval formula above the M-shaped lower bounds") {
  CHECK(muposet::conjecture2(4, rank20_host) == 73);
  CHECK(muposet::conjecture2(2, P("246135")) == 5);
  CHECK(muposet::mobius(muposet::make_M(2), P("246135")) == 5);

  // zero rule
  CHECK(muposet::conjecture2(2, P("125346")) == 0);
  CHECK(muposet::mobius(muposet::make_M(2), P("125346")) == 0);

  CHECK_THROWS_AS(muposet::conjecture2(1, P("2413")), muposet::Error);
  CHECK_THROWS_AS(muposet::conjecture2(2, P("2143")), muposet::Error);
}

TEST_CASE("interval formula matches the recursion for short hosts") {
  const Permutation lower = muposet::make_M(2);
  for (int n = 4; n <= 7; ++n)
    for (const Permutation& pi : muposet::at_most_one_descent_permutations(n)) {
      if (!muposet::contains(lower, pi)) continue;
      const auto ev = muposet::conjecture2_evaluate(2, pi);
      const long long want = muposet::mobius(lower, pi);
      CHECK_MESSAGE(ev.value == want, pi.str());
    }
}
