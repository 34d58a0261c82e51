#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. They work on plain boolean matrices, know nothing about the
// bitset kernel, and favour obviousness over speed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct Relation {
  std::size_t n = 0;
  std::vector<std::vector<bool>> le;  // reflexive transitive closed

  explicit Relation(std::size_t size) : n(size), le(size, std::vector<bool>(size, false)) {
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  }

  void add(std::size_t a, std::size_t b) { le[a][b] = true; }

  void close() {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
  }

  bool antisymmetric() const {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && le[i][j] && le[j][i]) return false;
    return true;
  }
};

inline std::vector<std::size_t> lower_bounds(const Relation& r, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < r.n; ++x) {
    bool below_all = true;
    for (std::size_t m : s) below_all = below_all && r.le[x][m];
    if (below_all) out.push_back(x);
  }
  return out;
}

inline std::vector<std::size_t> upper_bounds(const Relation& r, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < r.n; ++x) {
    bool above_all = true;
    for (std::size_t m : s) above_all = above_all && r.le[m][x];
    if (above_all) out.push_back(x);
  }
  return out;
}

inline std::optional<std::size_t> least(const Relation& r, const std::vector<std::size_t>& s) {
  for (std::size_t cand : s) {
    bool below_all = true;
    for (std::size_t other : s) below_all = below_all && r.le[cand][other];
    if (below_all) return cand;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> greatest(const Relation& r, const std::vector<std::size_t>& s) {
  for (std::size_t cand : s) {
    bool above_all = true;
    for (std::size_t other : s) above_all = above_all && r.le[other][cand];
    if (above_all) return cand;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> lub(const Relation& r, const std::vector<std::size_t>& s) {
  return least(r, upper_bounds(r, s));
}

inline std::optional<std::size_t> glb(const Relation& r, const std::vector<std::size_t>& s) {
  return greatest(r, lower_bounds(r, s));
}

inline bool is_join_semilattice(const Relation& r) {
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = 0; b < r.n; ++b)
      if (!lub(r, {a, b})) return false;
  return true;
}

// Minimal placement encoding by brute force over all permutations that list
// smaller elements first. Usable up to seven or so elements.
inline std::vector<std::uint64_t> min_placement_encoding(const Relation& r) {
  std::vector<std::size_t> perm(r.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<std::uint64_t>> best;
  do {
    bool extension = true;
    for (std::size_t i = 0; i < r.n && extension; ++i)
      for (std::size_t j = i + 1; j < r.n && extension; ++j)
        if (r.le[perm[j]][perm[i]] && perm[j] != perm[i]) extension = false;
    if (!extension) continue;

    std::vector<std::uint64_t> cols(r.n, 0);
    for (std::size_t j = 1; j < r.n; ++j) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < j; ++i) {
        key <<= 1;
        key |= (r.le[perm[i]][perm[j]] && perm[i] != perm[j]) ? 1 : 0;
      }
      cols[j] = key;
    }
    if (!best || cols < *best) best = cols;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

// Every join-semilattice on n labelled elements, one relation per
// comparability assignment over unordered pairs. Exponential; n <= 4 in
// practice.
inline std::vector<Relation> all_labelled_join_semilattices(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<Relation> found;
  std::vector<int> choice(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  while (true) {
    Relation r(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (choice[k] == 1) r.add(pairs[k].first, pairs[k].second);
      if (choice[k] == 2) r.add(pairs[k].second, pairs[k].first);
    }
    Relation closed = r;
    closed.close();
    bool already_transitive = closed.le == r.le;
    if (already_transitive && is_join_semilattice(r)) found.push_back(r);

    std::size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return found;
}

}  // namespace oracle
