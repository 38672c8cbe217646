#include "muposet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>

#include "muposet/error.hpp"
#include "muposet/formulas.hpp"
#include "muposet/poset.hpp"

namespace muposet {

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) raise(ErrorKind::out_of_range, "all_permutations: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> one_descent_permutations(int n) {
  if (n < 1) raise(ErrorKind::out_of_range, "one_descent_permutations: n must be >= 1");
  std::vector<Permutation> out;
  // Split the values into two increasing blocks A|B; the result has exactly
  // one descent unless A holds the smallest values outright.
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
      if (mask & (1u << (x - 1))) v.push_back(x);
    const std::size_t split = v.size();
    for (int x = 1; x <= n; ++x)
      if (!(mask & (1u << (x - 1)))) v.push_back(x);
    if (v[split - 1] < v[split]) continue;
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> at_most_one_descent_permutations(int n) {
  auto out = one_descent_permutations(n);
  out.push_back(Permutation::identity(n));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct ItemOutcome {
  long long checked = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, long long> counters;
};

using Item = std::function<ItemOutcome()>;

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    jobs = hw > 0 ? static_cast<int>(hw) : 1;
  }
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                                std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (!cancelled.load(std::memory_order_relaxed)) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          cancelled.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Runs the items (possibly in parallel) and folds the outcomes in item order,
// so the report does not depend on the job count.
VerificationReport run_campaign(std::string campaign,
                                std::map<std::string, long long> parameters,
                                const std::vector<Item>& items, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ItemOutcome> results(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) { results[i] = items[i](); });

  VerificationReport report;
  report.campaign = std::move(campaign);
  report.parameters = std::move(parameters);
  for (auto& r : results) {
    report.total_checked += r.checked;
    report.failed += static_cast<long long>(r.mismatches.size());
    for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
    for (const auto& [key, value] : r.counters) report.parameters[key] += value;
  }
  report.passed = report.total_checked - report.failed;
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

// Permutations of length n whose first letter is fixed; calls fn on each.
void for_each_with_first(int n, int first, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> tail;
  tail.reserve(static_cast<std::size_t>(n) - 1);
  for (int x = 1; x <= n; ++x)
    if (x != first) tail.push_back(x);
  std::vector<int> v(static_cast<std::size_t>(n));
  v[0] = first;
  do {
    std::copy(tail.begin(), tail.end(), v.begin() + 1);
    fn(Permutation(v));
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

VerificationReport verify_theorem4(int max_n, const VerifyOptions& options) {
  if (max_n < 3 || max_n > 10)
    raise(ErrorKind::out_of_range, "verify_theorem4: max_n must be in [3, 10]");

  std::vector<Item> items;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& pi : at_most_one_descent_permutations(n))
      items.push_back([pi]() {
        ItemOutcome out;
        const Theorem4Result th = theorem4(pi);
        const long long oracle = mobius_top(pi);
        out.checked = 1;
        if (th.value != oracle)
          out.mismatches.push_back(
              {pi.str(), std::nullopt, th.value, oracle, to_string(th.case_label)});
        return out;
      });

  return run_campaign("theorem4", {{"max_n", max_n}}, items, options.jobs);
}

VerificationReport verify_conjecture1(int max_n, const VerifyOptions& options) {
  if (max_n < 2 || max_n > 7)
    raise(ErrorKind::out_of_range, "verify_conjecture1: max_n must be in [2, 7]");

  std::vector<Item> items;
  for (int n = 2; n <= max_n; ++n)
    for (const TargetShape shape : {TargetShape::M, TargetShape::W})
      items.push_back([n, shape]() {
        ItemOutcome out;
        const Permutation target = shape == TargetShape::M ? make_M(n) : make_W(n);
        const Downset ds(target);
        for (const auto& sigma : ds.members()) {
          if (sigma == target || descent_count(sigma) != 1) continue;
          const Conj1Result res = conjecture1(sigma, shape, n);
          const long long oracle = ds.mobius_from(sigma);
          ++out.checked;
          if (res.value != oracle)
            out.mismatches.push_back({target.str(), sigma.str(), res.value, oracle,
                                      to_string(res.branch)});
        }
        return out;
      });

  return run_campaign("conjecture1", {{"max_n", max_n}}, items, options.jobs);
}

VerificationReport verify_conjecture2(int max_m, int max_n, const VerifyOptions& options) {
  if (max_m < 2)
    raise(ErrorKind::out_of_range, "verify_conjecture2: max_m must be >= 2");
  if (max_n < 2 * max_m || max_n > 14)
    raise(ErrorKind::out_of_range,
          "verify_conjecture2: max_n must be in [2*max_m, 14]");

  std::vector<Permutation> patterns;  // make_M(2), make_M(3), ...
  for (int m = 2; m <= max_m; ++m) patterns.push_back(make_M(m));

  std::vector<Item> items;
  for (int n = 4; n <= max_n; ++n)
    for (const auto& pi : at_most_one_descent_permutations(n))
      items.push_back([pi, patterns]() {
        ItemOutcome out;
        std::optional<Downset> ds;
        for (std::size_t idx = 0; idx < patterns.size(); ++idx) {
          const int m = static_cast<int>(idx) + 2;
          const Permutation& pat = patterns[idx];
          if (pat.size() > pi.size() || !contains(pat, pi)) continue;
          if (!ds) ds.emplace(pi);
          const long long oracle = ds->mobius_from(pat);
          ++out.checked;
          try {
            const Conj2Evaluation ev = conjecture2_evaluate(m, pi);
            if (ev.value != oracle)
              out.mismatches.push_back({pi.str(), pat.str(), ev.value, oracle,
                                        ev.zero_rule ? "zero-rule" : "formula"});
            if (!ev.zero_rule && ev.value != ev.value_alt_beta)
              ++out.counters["beta_reading_disagreements"];
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::domain) throw;
            ++out.counters["chat_domain_errors"];
            out.mismatches.push_back(
                {pi.str(), pat.str(), 0, oracle, "chat-domain-error"});
          }
        }
        return out;
      });

  return run_campaign("conjecture2",
                      {{"max_m", max_m},
                       {"max_n", max_n},
                       {"beta_reading_disagreements", 0},
                       {"chat_domain_errors", 0}},
                      items, options.jobs);
}

namespace {

Item lemma1_corollary2_item(int n, int first) {
  return [n, first]() {
    ItemOutcome out;
    for_each_with_first(n, first, [&](const Permutation& pi) {
      const int run_inc = longest_adjacency_run(pi, Direction::increasing);
      const int run_dec = longest_adjacency_run(pi, Direction::decreasing);
      if (run_inc < 3 && run_dec < 3) return;
      const Downset ds(pi);
      const long long mu_top = ds.mobius_from(Permutation::identity(1));
      if (run_inc >= 3) {
        ++out.checked;
        ++out.counters["lemma1_checked"];
        if (mu_top != 0)
          out.mismatches.push_back({pi.str(), std::nullopt, 0, mu_top, "lemma1-increasing"});
      }
      if (run_dec >= 3) {
        ++out.checked;
        ++out.counters["lemma1_checked"];
        if (mu_top != 0)
          out.mismatches.push_back({pi.str(), std::nullopt, 0, mu_top, "lemma1-decreasing"});
      }
      // A monotone run of k consecutive adjacent letters, in either
      // direction, kills the interval from the increasing permutation of
      // length k - 2.
      for (int k = 3; k <= 5; ++k) {
        if (run_inc < k && run_dec < k) continue;
        const Permutation lower = Permutation::identity(k - 2);
        const long long mu = ds.mobius_from(lower);
        ++out.checked;
        ++out.counters["corollary2_checked"];
        if (mu != 0)
          out.mismatches.push_back(
              {pi.str(), lower.str(), 0, mu, "corollary2-" + std::to_string(k)});
      }
    });
    return out;
  };
}

Item lemma3_item(const Permutation& host) {
  return [host]() {
    ItemOutcome out;
    const int n = host.size();
    for (int m = 2; m < n; ++m)
      for (const auto& sigma : one_descent_permutations(m)) {
        if (adjacency_count(sigma) > 2) continue;
        const bool described = lemma3_contains(host, sigma);
        const bool actual = contains(sigma, host);
        ++out.checked;
        ++out.counters["lemma3_checked"];
        if (described != actual)
          out.mismatches.push_back({host.str(), sigma.str(), described ? 1 : 0,
                                    actual ? 1 : 0, "lemma3"});
      }
    return out;
  };
}

Item lemma5_item(int m) {
  return [m]() {
    ItemOutcome out;
    const auto relation = [&](const Permutation& sigma, const Permutation& lam,
                              long long mu_sigma) {
      const long long mu_lam = mobius_top(lam);
      ++out.checked;
      ++out.counters["lemma5_checked"];
      if (mu_lam + mu_sigma != 0)
        out.mismatches.push_back({sigma.str(), lam.str(), -mu_sigma, mu_lam, "lemma5"});
    };
    for (const auto& sigma : one_descent_permutations(m)) {
      const auto adj = adjacencies(sigma);
      const auto interior = [&](const AdjacencyInfo& a) {
        return a.value != 1 && a.value != m - 1;
      };
      if (adj.size() == 1 && interior(adj[0])) {
        const long long mu_sigma = mobius_top(sigma);
        if (mu_sigma == 0) continue;
        const int d = descent_positions(sigma)[0];
        relation(sigma,
                 adj[0].position < d ? delete_value(sigma, m) : delete_value(sigma, 1),
                 mu_sigma);
      } else if (adj.size() == 2 && (interior(adj[0]) || interior(adj[1]))) {
        const long long mu_sigma = mobius_top(sigma);
        if (mu_sigma == 0) continue;
        // the deletion must leave both adjacencies intact: deleting m would
        // destroy an (m-1)m adjacency and deleting 1 would destroy a 12
        if (adj[0].value != m - 1 && adj[1].value != m - 1)
          relation(sigma, delete_value(sigma, m), mu_sigma);
        if (adj[0].value != 1 && adj[1].value != 1)
          relation(sigma, delete_value(sigma, 1), mu_sigma);
      }
    }
    return out;
  };
}

Item lemma6_item(int m) {
  return [m]() {
    ItemOutcome out;
    for (const auto& sigma : one_descent_permutations(m)) {
      const auto adj = adjacencies(sigma);
      if (adj.empty()) continue;
      const bool all_interior =
          std::all_of(adj.begin(), adj.end(), [&](const AdjacencyInfo& a) {
            return a.value != 1 && a.value != m - 1;
          });
      if (!all_interior) continue;
      const long long mu_sigma = mobius_top(sigma);
      if (mu_sigma == 0) continue;
      const Permutation no_top = delete_value(sigma, m);
      const long long sum = mu_sigma + mobius_top(delete_value(sigma, 1)) +
                            mobius_top(no_top) + mobius_top(delete_value(no_top, 1));
      ++out.checked;
      ++out.counters["lemma6_checked"];
      if (sum != 0)
        out.mismatches.push_back({sigma.str(), std::nullopt, sum, 0, "lemma6"});
    }
    return out;
  };
}

Item basis_item(int n, int first) {
  return [n, first]() {
    ItemOutcome out;
    const Permutation p321({3, 2, 1});
    const Permutation p2143({2, 1, 4, 3});
    const Permutation p3142({3, 1, 4, 2});
    for_each_with_first(n, first, [&](const Permutation& pi) {
      const bool avoids =
          !contains(p321, pi) && !contains(p2143, pi) && !contains(p3142, pi);
      const bool member = in_P01(pi);
      ++out.checked;
      ++out.counters["basis_checked"];
      if (avoids != member)
        out.mismatches.push_back(
            {pi.str(), std::nullopt, avoids ? 1 : 0, member ? 1 : 0, "basis"});
    });
    return out;
  };
}

}  // namespace

VerificationReport verify_lemmas(int max_n, const VerifyOptions& options) {
  if (max_n < 3 || max_n > 9)
    raise(ErrorKind::out_of_range, "verify_lemmas: max_n must be in [3, 9]");

  std::vector<Item> items;
  for (int n = 3; n <= max_n; ++n)
    for (int first = 1; first <= n; ++first)
      items.push_back(lemma1_corollary2_item(n, first));
  for (int n = 4; n <= max_n; ++n)
    for (const auto& host : one_descent_permutations(n))
      if (adjacency_count(host) == 0) items.push_back(lemma3_item(host));
  for (int m = 4; m <= max_n; ++m) items.push_back(lemma5_item(m));
  for (int m = 5; m <= max_n; ++m) items.push_back(lemma6_item(m));
  for (int n = 1; n <= max_n; ++n)
    for (int first = 1; first <= n; ++first) items.push_back(basis_item(n, first));

  return run_campaign("lemmas",
                      {{"max_n", max_n},
                       {"lemma1_checked", 0},
                       {"corollary2_checked", 0},
                       {"lemma3_checked", 0},
                       {"lemma5_checked", 0},
                       {"lemma6_checked", 0},
                       {"basis_checked", 0}},
                      items, options.jobs);
}

}  // namespace muposet
