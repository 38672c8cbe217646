#include "muposet/formulas.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <utility>

namespace muposet {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

long long ceil_half(long long a) { return floor_div(a + 1, 2); }

}  // namespace

long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (long long t = 1; t <= k; ++t) {
    acc = acc * static_cast<unsigned long long>(n - k + t) /
          static_cast<unsigned long long>(t);
    if (acc > static_cast<unsigned __int128>(LLONG_MAX))
      raise(ErrorKind::overflow, "binomial coefficient exceeds the native integer range");
  }
  return static_cast<long long>(acc);
}

const char* to_string(Theorem4Case c) {
  switch (c) {
    case Theorem4Case::short_length: return "short-length";
    case Theorem4Case::part1: return "part1";
    case Theorem4Case::part2: return "part2";
    case Theorem4Case::part3: return "part3";
    case Theorem4Case::part4a: return "part4a";
    case Theorem4Case::part4b: return "part4b";
    case Theorem4Case::part5a: return "part5a";
    case Theorem4Case::part5b: return "part5b";
    case Theorem4Case::part5c: return "part5c";
    case Theorem4Case::part5d: return "part5d";
    case Theorem4Case::part6a: return "part6a";
    case Theorem4Case::part6b: return "part6b";
    case Theorem4Case::part6c: return "part6c";
  }
  return "?";
}

Theorem4Result theorem4(const Permutation& pi) {
  const auto& v = pi.values();
  const int n = pi.size();
  const auto descents = descent_positions(pi);
  if (descents.size() > 1)
    raise(ErrorKind::out_of_class, "theorem4: defined only for at most one descent");

  if (n <= 2) return {n == 1 ? 1 : -1, Theorem4Case::short_length};

  if ((v[0] == 1 && v[1] == 2) ||
      (v[static_cast<std::size_t>(n) - 2] == n - 1 && v[static_cast<std::size_t>(n) - 1] == n))
    return {0, Theorem4Case::part1};
  if (has_triple_adjacency(pi)) return {0, Theorem4Case::part2};

  const auto adj = adjacencies(pi);
  const long long sign = (n % 2 == 1) ? 1 : -1;
  if (adj.size() > 2) return {0, Theorem4Case::part3};

  if (adj.size() == 2) {
    if (adj[0].value > adj[1].value) return {sign, Theorem4Case::part4a};
    return {0, Theorem4Case::part4b};
  }

  if (adj.size() == 1) {
    // The increasing permutation is caught by part2, so a descent exists here.
    const long long i = adj[0].position;
    const int d = descents[0];
    if (i < d) {
      if (v[0] != 1) return {sign * i, Theorem4Case::part5a};
      return {sign * (i - 1), Theorem4Case::part5b};
    }
    if (v[static_cast<std::size_t>(n) - 1] != n)
      return {sign * (n - i), Theorem4Case::part5c};
    return {sign * (n - i - 1), Theorem4Case::part5d};
  }

  // Adjacency-free: for even length these are exactly the two interleaving
  // permutations, distinguished by the first letter.
  if (n % 2 == 0) {
    if (v[0] == 1) return {-binomial(n / 2, 2), Theorem4Case::part6a};
    return {-binomial(n / 2 + 1, 2), Theorem4Case::part6b};
  }
  return {binomial((n + 1) / 2, 2), Theorem4Case::part6c};
}

bool lemma3_contains(const Permutation& pi, const Permutation& sigma) {
  const int n = pi.size();
  if (descent_count(pi) != 1 || adjacency_count(pi) != 0)
    raise(ErrorKind::out_of_class,
          "lemma3_contains: host must have exactly one descent and no adjacencies");
  if (descent_count(sigma) != 1)
    raise(ErrorKind::out_of_class, "lemma3_contains: sigma must have exactly one descent");
  const int adj = adjacency_count(sigma);
  if (adj > 2)
    raise(ErrorKind::out_of_class, "lemma3_contains: sigma must have at most two adjacencies");
  const int m = sigma.size();
  if (m >= n)
    raise(ErrorKind::out_of_class, "lemma3_contains: sigma must be shorter than the host");

  if (m == n - 1 && adj == 2) return false;
  if (m == n - 1 && adj == 1 && !related(sigma, pi)) return false;
  if (m == n - 2 && adj == 2 && !related(sigma, pi)) return false;
  return true;
}

const char* to_string(Conj1Branch b) {
  switch (b) {
    case Conj1Branch::separable_m: return "separable-M";
    case Conj1Branch::separable_w: return "separable-W";
    case Conj1Branch::non_separable: return "non-separable";
  }
  return "?";
}

Conj1Result conjecture1(const Permutation& sigma, TargetShape shape, int n) {
  if (n < 2) raise(ErrorKind::out_of_range, "conjecture1: n must be >= 2");
  if (descent_count(sigma) != 1)
    raise(ErrorKind::out_of_class, "conjecture1: sigma must have exactly one descent");
  const Permutation target = shape == TargetShape::M ? make_M(n) : make_W(n);
  if (!contains(sigma, target))
    raise(ErrorKind::not_contained, "conjecture1: sigma is not contained in the target");

  const int m = sigma.size();
  const int i = adjacency_count(sigma);
  const bool rel = related(sigma, target);

  long long magnitude = 0;
  Conj1Branch branch;
  if (is_separable(sigma)) {
    if (shape == TargetShape::M) {
      magnitude = binomial(n + 1, m);
      branch = Conj1Branch::separable_m;
    } else {
      magnitude = binomial(n + m - i - 2, m);
      branch = Conj1Branch::separable_w;
    }
  } else {
    const int a = rel ? 0 : 1;
    magnitude = binomial(n + floor_div(m - i - a, 2), m);
    branch = Conj1Branch::non_separable;
  }
  const long long sign = (m % 2 == 0) ? 1 : -1;
  return {sign * magnitude, branch, m, i, rel};
}

long long chat(long long alpha, long long beta, long long k, long long s) {
  if (k < 0 || k >= s)
    raise(ErrorKind::domain, "chat: k must lie in [0, s)");
  if (2 * k < s) return binomial(alpha - 2 * k, beta);
  return binomial(alpha - 2 * (s - k) + 1, beta);
}

ConjTwoStats conjecture2_stats(int m, const Permutation& pi) {
  const auto& v = pi.values();
  const int n = pi.size();
  const auto descents = descent_positions(pi);
  if (descents.size() > 1)
    raise(ErrorKind::out_of_class, "conjecture2: defined only for at most one descent");
  // Descent-free hosts have no descent to sit on either side of; treating
  // every position as "before" keeps the record mechanical.
  const int d = descents.empty() ? n : descents[0];

  ConjTwoStats st;
  const auto adj = adjacencies(pi);
  st.a = static_cast<int>(adj.size());
  st.n_hat = (v[static_cast<std::size_t>(n) - 1] == n) ? n - 1 : n;

  // Adjacency values ascending, bracketed by the two phantoms: the low one
  // counts as before the descent, the high one as after.
  std::vector<std::pair<int, bool>> entries;  // (value, before-the-descent)
  entries.reserve(adj.size() + 2);
  for (const auto& a : adj) entries.emplace_back(a.value, a.position < d);
  std::sort(entries.begin(), entries.end());
  entries.insert(entries.begin(), {v[0] != 1 ? -1 : 0, true});
  entries.emplace_back(st.n_hat + 1, false);

  for (const auto& [value, before] : entries) {
    (void)before;
    st.A.push_back(value);
  }
  for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
    const int gap = static_cast<int>(
        floor_div(entries[k + 1].first - entries[k].first - 2, 2));
    st.J_hat.push_back(gap);
    if (entries[k].second == entries[k + 1].second)
      st.j_a_pre.push_back(gap);
    else
      st.j_b_pre.push_back(gap);
  }
  st.s = std::accumulate(st.J_hat.begin(), st.J_hat.end(), 0);

  // Trim: drop one maximal entry (from j_b when j_a is empty, else from j_a,
  // leaving epsilon as its excess over what remains of j_a), record the
  // lengths, then discard zeros and sort.
  std::vector<int> ja = st.j_a_pre, jb = st.j_b_pre;
  if (ja.empty()) {
    if (!jb.empty())
      jb.erase(std::max_element(jb.begin(), jb.end()));
    st.epsilon = 0;
  } else {
    auto mx = std::max_element(ja.begin(), ja.end());
    const int removed = *mx;
    ja.erase(mx);
    st.epsilon = removed - std::accumulate(ja.begin(), ja.end(), 0);
  }
  st.alpha = static_cast<int>(ja.size());
  st.beta = static_cast<int>(jb.size());
  std::erase(ja, 0);
  std::erase(jb, 0);
  if (jb.empty()) st.epsilon = 0;
  std::sort(ja.begin(), ja.end());
  std::sort(jb.begin(), jb.end(), std::greater<int>());
  st.j_a = std::move(ja);
  st.j_b = std::move(jb);

  const bool first1 = v[0] == 1;
  const bool lastn = v[static_cast<std::size_t>(n) - 1] == n;
  st.t = ((first1 && n % 2 == 0 && lastn) || (first1 && n % 2 == 1 && !lastn)) ? 1 : 0;

  st.lambda = static_cast<int>(ceil_half(st.n_hat) + m - ceil_half(5LL * st.a) +
                               st.beta - st.t);
  st.sigma = 2 * m - 2 * st.a + st.beta;
  return st;
}

namespace {

// The conjectured magnitude: a single binomial, corrected downward over the
// opposite-side gaps and upward over the same-side gaps. `beta` is passed
// separately so the two readings of the trim can share the code.
long long conj2_magnitude(const ConjTwoStats& st, int m, long long beta) {
  const long long lambda =
      ceil_half(st.n_hat) + m - ceil_half(5LL * st.a) + beta - st.t;
  const long long sigma = 2LL * m - 2LL * st.a + beta;
  const auto& ja = st.j_a;
  const auto& jb = st.j_b;
  const long long s = st.s;
  const long long B = static_cast<long long>(jb.size());

  const auto partial_sum = [](const std::vector<int>& seq, long long from, long long to) {
    long long acc = 0;
    for (long long t = std::max<long long>(from, 0); t <= to; ++t)
      acc += seq[static_cast<std::size_t>(t)];
    return acc;
  };

  long long total = binomial(lambda, sigma);
  for (long long tau = 0; tau < B; ++tau)
    for (long long gamma = 0; gamma <= tau; ++gamma) {
      const long long hi =
          jb[static_cast<std::size_t>(gamma)] + partial_sum(jb, tau + 1, B - 1) - 1;
      for (long long omega = tau - gamma; omega <= hi; ++omega)
        total -= chat(lambda - tau - 2, sigma - tau - 1, omega, s);
    }
  for (long long tau = 0; tau < static_cast<long long>(ja.size()); ++tau) {
    const long long g_hi =
        ja[static_cast<std::size_t>(tau)] + partial_sum(ja, 0, tau - 1);
    for (long long gamma = 1; gamma <= g_hi; ++gamma)
      total += chat(lambda - B - tau, sigma - B - tau, gamma, s + 1);
    for (long long omega = 1; omega <= st.epsilon; ++omega)
      total += chat(lambda - B - tau, sigma - B - tau, omega + 1, s + 1);
  }
  return total;
}

}  // namespace

Conj2Evaluation conjecture2_evaluate(int m, const Permutation& pi) {
  if (m < 2) raise(ErrorKind::out_of_range, "conjecture2: m must be >= 2");
  Conj2Evaluation ev;
  ev.stats = conjecture2_stats(m, pi);

  const auto& v = pi.values();
  const int n = pi.size();
  ev.zero_rule = (n >= 2 && v[0] == 1 && v[1] == 2) ||
                 (n >= 2 && v[static_cast<std::size_t>(n) - 2] == n - 1 &&
                  v[static_cast<std::size_t>(n) - 1] == n) ||
                 has_triple_adjacency(pi);
  if (ev.zero_rule) return ev;

  const long long sign = (n % 2 == 0) ? 1 : -1;
  ev.value = sign * conj2_magnitude(ev.stats, m, ev.stats.beta);
  ev.value_alt_beta =
      sign * conj2_magnitude(ev.stats, m, static_cast<long long>(ev.stats.j_b.size()));
  return ev;
}

long long conjecture2(int m, const Permutation& pi) {
  return conjecture2_evaluate(m, pi).value;
}

}  // namespace muposet
