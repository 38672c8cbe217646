#include "muposet/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <climits>
#include <numeric>

namespace muposet {

namespace {

void check_is_permutation(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  if (n < 1) raise(ErrorKind::invalid_word, "a permutation must have length >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : v) {
    if (x < 1 || x > n)
      raise(ErrorKind::invalid_word,
            "letter " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x - 1)])
      raise(ErrorKind::invalid_word, "duplicate letter " + std::to_string(x));
    seen[static_cast<std::size_t>(x - 1)] = 1;
  }
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_is_permutation(values_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) raise(ErrorKind::out_of_range, "identity: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size())
    raise(ErrorKind::out_of_range,
          "position " + std::to_string(position) + " outside 1.." + std::to_string(size()));
  return values_[static_cast<std::size_t>(position - 1)];
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  if (text.find_first_of(", \t\n\r") != std::string_view::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_separator(text[i])) ++i;
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) ++j;
      if (j > i) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
        if (ec != std::errc{} || ptr != text.data() + j)
          raise(ErrorKind::invalid_word,
                "cannot read letter '" + std::string(text.substr(i, j - i)) + "'");
        vals.push_back(v);
      }
      i = j;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        raise(ErrorKind::invalid_word,
              std::string("unexpected character '") + c + "' in permutation");
      vals.push_back(c - '0');
    }
  }
  if (vals.empty()) raise(ErrorKind::invalid_word, "empty permutation");
  return Permutation(std::move(vals));
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int v : values_) s += static_cast<char>('0' + v);
    return s;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values_[i]);
  }
  return s;
}

Permutation standardize(const std::vector<int>& word) {
  if (word.empty()) raise(ErrorKind::invalid_word, "cannot standardize an empty word");
  std::vector<int> sorted(word);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    raise(ErrorKind::invalid_word, "cannot standardize a word with duplicate entries");
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) -
                              sorted.begin()) +
             1;
  return Permutation(std::move(out));
}

namespace {

// Depth-first subsequence search. Slots are filled left to right; a candidate
// host letter is accepted only if it sits in the same relative order as the
// pattern demands against every letter already chosen.
class OccurrenceSearch {
public:
  OccurrenceSearch(const std::vector<int>& pattern, const std::vector<int>& host,
                   bool stop_at_first)
      : pat_(pattern), host_(host), stop_(stop_at_first),
        k_(static_cast<int>(pattern.size())), n_(static_cast<int>(host.size())),
        chosen_(pattern.size(), 0) {}

  unsigned long long run() {
    if (k_ > n_) return 0;
    descend(0, 0);
    return count_;
  }

private:
  void descend(int slot, int from) {
    if (slot == k_) {
      if (__builtin_add_overflow(count_, 1ull, &count_))
        raise(ErrorKind::overflow, "occurrence count exceeds the native integer range");
      done_ = stop_;
      return;
    }
    for (int i = from; i <= n_ - (k_ - slot); ++i) {
      const int cand = host_[static_cast<std::size_t>(i)];
      bool ok = true;
      for (int t = 0; t < slot && ok; ++t)
        ok = (pat_[static_cast<std::size_t>(t)] < pat_[static_cast<std::size_t>(slot)]) ==
             (chosen_[static_cast<std::size_t>(t)] < cand);
      if (!ok) continue;
      chosen_[static_cast<std::size_t>(slot)] = cand;
      descend(slot + 1, i + 1);
      if (done_) return;
    }
  }

  const std::vector<int>& pat_;
  const std::vector<int>& host_;
  const bool stop_;
  const int k_;
  const int n_;
  std::vector<int> chosen_;
  unsigned long long count_ = 0;
  bool done_ = false;
};

}  // namespace

bool contains(const Permutation& pattern, const Permutation& host) {
  if (pattern.size() > host.size()) return false;
  if (pattern.size() == host.size()) return pattern == host;
  return OccurrenceSearch(pattern.values(), host.values(), true).run() > 0;
}

long long occurrence_count(const Permutation& pattern, const Permutation& host) {
  const unsigned long long c =
      OccurrenceSearch(pattern.values(), host.values(), false).run();
  if (c > static_cast<unsigned long long>(LLONG_MAX))
    raise(ErrorKind::overflow, "occurrence count exceeds the native integer range");
  return static_cast<long long>(c);
}

std::vector<int> descent_positions(const Permutation& pi) {
  std::vector<int> out;
  const auto& v = pi.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int descent_count(const Permutation& pi) {
  return static_cast<int>(descent_positions(pi).size());
}

std::vector<AdjacencyInfo> adjacencies(const Permutation& pi, Direction direction) {
  std::vector<AdjacencyInfo> out;
  const auto& v = pi.values();
  const int step = direction == Direction::increasing ? 1 : -1;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] == v[i] + step)
      out.push_back({static_cast<int>(i) + 1, v[i], direction});
  return out;
}

int adjacency_count(const Permutation& pi, Direction direction) {
  return static_cast<int>(adjacencies(pi, direction).size());
}

bool has_triple_adjacency(const Permutation& pi, Direction direction) {
  const auto& v = pi.values();
  const int step = direction == Direction::increasing ? 1 : -1;
  for (std::size_t i = 0; i + 2 < v.size(); ++i)
    if (v[i + 1] == v[i] + step && v[i + 2] == v[i + 1] + step) return true;
  return false;
}

int longest_adjacency_run(const Permutation& pi, Direction direction) {
  const auto& v = pi.values();
  const int step = direction == Direction::increasing ? 1 : -1;
  int best = 1, cur = 1;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    cur = (v[i + 1] == v[i] + step) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

namespace {

Permutation erase_letter(const std::vector<int>& v, std::size_t index) {
  if (v.size() < 2)
    raise(ErrorKind::out_of_range, "cannot delete from a length-1 permutation");
  const int removed = v[index];
  std::vector<int> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == index) continue;
    out.push_back(v[i] > removed ? v[i] - 1 : v[i]);
  }
  return Permutation(std::move(out));
}

}  // namespace

Permutation delete_value(const Permutation& pi, int value) {
  if (value < 1 || value > pi.size())
    raise(ErrorKind::out_of_range,
          "value " + std::to_string(value) + " outside 1.." + std::to_string(pi.size()));
  const auto& v = pi.values();
  const std::size_t index = static_cast<std::size_t>(
      std::find(v.begin(), v.end(), value) - v.begin());
  return erase_letter(v, index);
}

Permutation delete_position(const Permutation& pi, int position) {
  if (position < 1 || position > pi.size())
    raise(ErrorKind::out_of_range,
          "position " + std::to_string(position) + " outside 1.." +
              std::to_string(pi.size()));
  return erase_letter(pi.values(), static_cast<std::size_t>(position - 1));
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> out(alpha.values());
  out.reserve(out.size() + beta.values().size());
  const int shift = alpha.size();
  for (int x : beta.values()) out.push_back(x + shift);
  return Permutation(std::move(out));
}

bool is_decomposable(const Permutation& pi) {
  const auto& v = pi.values();
  int prefix_max = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    prefix_max = std::max(prefix_max, v[i]);
    if (prefix_max == static_cast<int>(i) + 1) return true;
  }
  return false;
}

bool is_separable(const Permutation& pi) {
  static const Permutation p3142({3, 1, 4, 2});
  static const Permutation p2413({2, 4, 1, 3});
  return !contains(p3142, pi) && !contains(p2413, pi);
}

bool related(const Permutation& sigma, const Permutation& pi) {
  return (sigma.values().front() == 1) == (pi.values().front() == 1);
}

Permutation make_M(int n) {
  if (n < 2) raise(ErrorKind::out_of_range, "make_M: n must be >= 2");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) v.push_back(2 * i);
  for (int i = 1; i <= n; ++i) v.push_back(2 * i - 1);
  return Permutation(std::move(v));
}

Permutation make_W(int n) {
  if (n < 2) raise(ErrorKind::out_of_range, "make_W: n must be >= 2");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) v.push_back(2 * i - 1);
  for (int i = 1; i <= n; ++i) v.push_back(2 * i);
  return Permutation(std::move(v));
}

bool in_P01(const Permutation& pi) { return descent_count(pi) <= 1; }

}  // namespace muposet
