#include "muposet/poset.hpp"

#include <algorithm>

namespace muposet {

namespace {

// Exact encoding of a word of length <= 15 over values 1..15: length nibble
// followed by one nibble per letter. Distinct words get distinct keys.
std::uint64_t pack(const std::vector<int>& v) {
  std::uint64_t key = static_cast<std::uint64_t>(v.size());
  for (int x : v) key = (key << 4) | static_cast<std::uint64_t>(x);
  return key;
}

// Values of `parent` with the letter at `index` removed and the gap closed.
void child_word(const std::vector<int>& parent, std::size_t index, std::vector<int>& out) {
  const int removed = parent[index];
  out.clear();
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (i == index) continue;
    out.push_back(parent[i] > removed ? parent[i] - 1 : parent[i]);
  }
}

bool length_lex_less(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.values() < b.values();
}

}  // namespace

Downset::Downset(Permutation root) {
  const int n = root.size();
  if (n > max_root_length)
    raise(ErrorKind::too_large,
          "interval too large: hosts longer than " + std::to_string(max_root_length) +
              " letters are not supported");

  members_.push_back(std::move(root));
  children_.emplace_back();
  index_.emplace(pack(members_[0].values()), 0);

  // Breadth-first by length: all members of length len are generated before
  // any member of length len-1, so indices increase as lengths decrease.
  std::vector<int> buffer;
  std::size_t layer_begin = 0;
  for (int len = n; len > 1; --len) {
    const std::size_t layer_end = members_.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t pos = 0; pos < static_cast<std::size_t>(len); ++pos) {
        child_word(members_[i].values(), pos, buffer);
        const std::uint64_t key = pack(buffer);
        auto [it, inserted] = index_.try_emplace(key, static_cast<int>(members_.size()));
        if (inserted) {
          members_.emplace_back(buffer);
          children_.emplace_back();
        }
        const int child = it->second;
        auto& edges = children_[i];
        if (std::find(edges.begin(), edges.end(), child) == edges.end())
          edges.push_back(child);
      }
    }
    layer_begin = layer_end;
  }

  // Transitive closure over deletions: a member's reachable set is exactly the
  // set of its patterns. Children always carry larger indices, so one sweep
  // from the shortest members upward fills every row.
  const std::size_t count = members_.size();
  words_ = (count + 63) / 64;
  reach_.assign(count * words_, 0);
  for (std::size_t i = count; i-- > 0;) {
    std::uint64_t* row = &reach_[i * words_];
    row[i / 64] |= 1ull << (i % 64);
    for (int c : children_[i]) {
      const std::uint64_t* crow = &reach_[static_cast<std::size_t>(c) * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= crow[w];
    }
  }
}

int Downset::find(const Permutation& p) const {
  if (p.size() > members_[0].size()) return -1;
  auto it = index_.find(pack(p.values()));
  return it == index_.end() ? -1 : it->second;
}

bool Downset::reach_bit(int from, int to) const {
  return (reach_[static_cast<std::size_t>(from) * words_ +
                 static_cast<std::size_t>(to) / 64] >>
          (static_cast<std::size_t>(to) % 64)) &
         1ull;
}

bool Downset::has_member(const Permutation& p) const { return find(p) >= 0; }

std::vector<std::vector<Permutation>> Downset::members_by_length() const {
  std::vector<std::vector<Permutation>> grouped(
      static_cast<std::size_t>(members_[0].size()) + 1);
  for (const auto& m : members_) grouped[static_cast<std::size_t>(m.size())].push_back(m);
  for (auto& bucket : grouped)
    std::sort(bucket.begin(), bucket.end(),
              [](const Permutation& a, const Permutation& b) { return a.values() < b.values(); });
  return grouped;
}

std::vector<long long> Downset::mobius_vector_from(const Permutation& lower) const {
  // Bottom-up by length (equivalently, by decreasing index): every proper
  // pattern of a member has a larger index, so each mu value is final when
  // first computed. Members outside the interval keep mu = 0.
  std::vector<long long> mu(members_.size(), 0);
  const int li = find(lower);
  if (li < 0) return mu;
  mu[static_cast<std::size_t>(li)] = 1;
  for (std::size_t i = members_.size(); i-- > 0;) {
    if (static_cast<int>(i) == li) continue;
    if (!reach_bit(static_cast<int>(i), li)) continue;
    const std::uint64_t* row = &reach_[i * words_];
    long long acc = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      if (w == i / 64) bits &= ~(1ull << (i % 64));
      while (bits) {
        const int b = __builtin_ctzll(bits);
        acc += mu[w * 64 + static_cast<std::size_t>(b)];
        bits &= bits - 1;
      }
    }
    mu[i] = -acc;
  }
  return mu;
}

long long Downset::mobius_from(const Permutation& lower) const {
  if (find(lower) < 0) return 0;
  return mobius_vector_from(lower)[0];
}

std::vector<Permutation> Downset::interval_from(const Permutation& lower) const {
  std::vector<Permutation> out;
  const int li = find(lower);
  if (li < 0) return out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (reach_bit(static_cast<int>(i), li)) out.push_back(members_[i]);
  std::sort(out.begin(), out.end(), length_lex_less);
  return out;
}

Downset downset(const Permutation& pi) { return Downset(pi); }

long long mobius(const Permutation& lower, const Permutation& upper) {
  if (upper.size() > Downset::max_root_length)
    raise(ErrorKind::too_large,
          "interval too large: hosts longer than " +
              std::to_string(Downset::max_root_length) + " letters are not supported");
  if (lower == upper) return 1;
  return Downset(upper).mobius_from(lower);
}

long long mobius_top(const Permutation& pi) {
  return mobius(Permutation::identity(1), pi);
}

std::vector<Permutation> interval(const Permutation& lower, const Permutation& upper) {
  if (upper.size() > Downset::max_root_length)
    raise(ErrorKind::too_large,
          "interval too large: hosts longer than " +
              std::to_string(Downset::max_root_length) + " letters are not supported");
  return Downset(upper).interval_from(lower);
}

}  // namespace muposet
