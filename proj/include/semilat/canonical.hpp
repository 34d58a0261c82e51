#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"

namespace semilat {

namespace detail {

// A placement order p_0..p_{n-1} compatible with the order (strictly smaller
// elements placed first) encodes the strict relation as one column per
// position j: bit i says whether p_i < p_j. Columns are compared with the
// oldest bit as the most significant one.
inline std::uint64_t placement_column(const Poset& p, const std::vector<ElementId>& placed,
                                      ElementId candidate) {
  std::uint64_t key = 0;
  for (const ElementId e : placed) {
    key <<= 1;
    key |= p.lt(e, candidate) ? 1 : 0;
  }
  return key;
}

// Interchangeable elements: swapping them is an automorphism fixing the rest.
inline bool twins(const Poset& p, ElementId a, ElementId b) {
  return p.down_set(a).without(a) == p.down_set(b).without(b) &&
         p.up_set(a).without(a) == p.up_set(b).without(b);
}

struct CanonicalSearch {
  const Poset& p;
  std::vector<ElementId> placed;
  std::vector<std::uint64_t> columns;
  std::vector<std::uint64_t> best;
  bool have_best = false;

  explicit CanonicalSearch(const Poset& poset) : p(poset) {}

  void run() {
    placed.reserve(p.size());
    columns.reserve(p.size());
    descend();
  }

  void descend() {
    const std::size_t k = placed.size();
    if (k == p.size()) {
      if (!have_best || columns < best) {
        best = columns;
        have_best = true;
      }
      return;
    }

    if (have_best) {
      for (std::size_t i = 0; i < k; ++i) {
        if (columns[i] != best[i]) {
          if (columns[i] > best[i]) return;
          break;
        }
      }
    }

    ElementSet placed_set;
    for (const ElementId e : placed) placed_set.insert(e);

    ElementSet feasible;
    for (ElementId e = 0; e < p.size(); ++e) {
      if (!placed_set.contains(e) && p.down_set(e).without(e).subset_of(placed_set))
        feasible.insert(e);
    }

    std::uint64_t min_key = ~std::uint64_t{0};
    for (const ElementId e : feasible)
      min_key = std::min(min_key, placement_column(p, placed, e));

    if (have_best) {
      bool tight = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (columns[i] != best[i]) {
          tight = false;
          break;
        }
      }
      if (tight && min_key > best[k]) return;
    }

    ElementSet tried;
    for (const ElementId e : feasible) {
      if (placement_column(p, placed, e) != min_key) continue;
      bool duplicate = false;
      for (const ElementId t : tried) {
        if (twins(p, t, e)) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      tried.insert(e);

      placed.push_back(e);
      columns.push_back(min_key);
      descend();
      placed.pop_back();
      columns.pop_back();
    }
  }
};

inline std::string render_code(std::size_t n, const std::vector<std::uint64_t>& columns) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(n) + ":";
  for (std::size_t j = 1; j < n; ++j) {
    if (j > 1) out += '.';
    std::uint64_t v = columns[j];
    std::string hex;
    do {
      hex += kHex[v & 0xf];
      v >>= 4;
    } while (v);
    std::reverse(hex.begin(), hex.end());
    out += hex;
  }
  return out;
}

}  // namespace detail

// Label-independent identifier: the minimal placement encoding over all
// order-compatible placements. Two posets get the same code exactly when
// they are isomorphic.
inline std::string canonical_code(const Poset& p) {
  detail::CanonicalSearch search(p);
  search.run();
  return detail::render_code(p.size(), search.best);
}

inline std::string canonical_code(const JoinSemilattice& j) { return canonical_code(j.poset()); }

// True when the poset's own element numbering already realizes the minimal
// placement encoding.
inline bool is_canonical_form(const Poset& p) {
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b : p.up_set(a).without(a))
      if (b < a) return false;

  std::vector<ElementId> identity;
  std::vector<std::uint64_t> columns;
  for (ElementId e = 0; e < p.size(); ++e) {
    columns.push_back(detail::placement_column(p, identity, e));
    identity.push_back(e);
  }
  detail::CanonicalSearch search(p);
  search.run();
  return search.best == columns;
}

inline bool isomorphic(const Poset& a, const Poset& b) {
  return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

inline bool isomorphic(const JoinSemilattice& a, const JoinSemilattice& b) {
  return isomorphic(a.poset(), b.poset());
}

// Rebuilds a poset from a canonical code, with synthetic labels e0, e1, ...
inline Poset poset_from_code(const std::string& code) {
  const auto colon = code.find(':');
  if (colon == std::string::npos) throw Error("malformed canonical code '" + code + "'");
  const std::size_t n = std::stoul(code.substr(0, colon));
  if (n == 0 || n > kWordCapacity) throw Error("malformed canonical code '" + code + "'");

  std::vector<std::uint64_t> columns(n, 0);
  std::size_t j = 1;
  std::size_t i = colon + 1;
  while (i < code.size()) {
    if (j >= n) throw Error("malformed canonical code '" + code + "'");
    std::uint64_t v = 0;
    while (i < code.size() && code[i] != '.') {
      const char c = code[i];
      const int digit = c >= '0' && c <= '9'   ? c - '0'
                        : c >= 'a' && c <= 'f' ? c - 'a' + 10
                                               : -1;
      if (digit < 0) throw Error("malformed canonical code '" + code + "'");
      v = (v << 4) | static_cast<std::uint64_t>(digit);
      ++i;
    }
    if (i < code.size()) ++i;
    columns[j++] = v;
  }
  if (n > 1 && j != n) throw Error("malformed canonical code '" + code + "'");

  std::vector<std::string> labels;
  for (std::size_t e = 0; e < n; ++e) labels.push_back("e" + std::to_string(e));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t col = 1; col < n; ++col) {
    for (std::size_t row = 0; row < col; ++row) {
      if ((columns[col] >> (col - 1 - row)) & 1) pairs.emplace_back(labels[row], labels[col]);
    }
  }
  return Poset::from_hasse(labels, pairs, kWordCapacity);
}

}  // namespace semilat
