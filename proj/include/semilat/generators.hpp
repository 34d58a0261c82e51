#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

// Finite truncation of the two-chain model: ascending chains x1..xn and
// y1..yn with xi below yi, the x chain closing below f and d, the y chain
// closing below c, and the fixed crown f,d,e,c,b,a,1 on top. The node where
// the x chain would converge is deliberately absent, so f and d meet at xn.
inline Poset hk_poset(std::size_t n, std::size_t cap = kDefaultElementCap) {
  if (n < 1) throw ArityOutOfRange("truncation depth must be at least 1");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  for (const char* crown : {"f", "d", "e", "c", "b", "a", "1"}) labels.push_back(crown);

  std::vector<std::pair<std::string, std::string>> below;
  const auto x = [](std::size_t i) { return "x" + std::to_string(i); };
  const auto y = [](std::size_t i) { return "y" + std::to_string(i); };
  for (std::size_t i = 1; i < n; ++i) {
    below.emplace_back(x(i), x(i + 1));
    below.emplace_back(y(i), y(i + 1));
  }
  for (std::size_t i = 1; i <= n; ++i) below.emplace_back(x(i), y(i));
  below.emplace_back(x(n), "f");
  below.emplace_back(x(n), "d");
  below.emplace_back(y(n), "c");
  below.emplace_back("f", "e");
  below.emplace_back("f", "b");
  below.emplace_back("d", "e");
  below.emplace_back("d", "a");
  below.emplace_back("c", "a");
  below.emplace_back("c", "b");
  below.emplace_back("e", "1");
  below.emplace_back("a", "1");
  below.emplace_back("b", "1");
  return Poset::from_hasse(labels, below, cap);
}

inline JoinSemilattice hk_truncation(std::size_t n, std::size_t cap = kDefaultElementCap) {
  return JoinSemilattice::validate(hk_poset(n, cap));
}

// Product of two k-element chains, elements labelled by coordinate digits,
// so the 3x3 grid runs "00", "01", ..., "22" with "00" at the bottom.
inline Poset grid_poset(std::size_t k, std::size_t cap = kDefaultElementCap) {
  if (k < 1 || k > 9) throw ArityOutOfRange("grid side must be between 1 and 9");
  std::vector<std::string> labels;
  const auto at = [k](std::size_t i, std::size_t j) {
    return std::to_string(i) + std::to_string(j);
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) labels.push_back(at(i, j));

  std::vector<std::pair<std::string, std::string>> below;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i + 1 < k) below.emplace_back(at(i, j), at(i + 1, j));
      if (j + 1 < k) below.emplace_back(at(i, j), at(i, j + 1));
    }
  }
  return Poset::from_hasse(labels, below, cap);
}

inline JoinSemilattice grid_lattice(std::size_t k, std::size_t cap = kDefaultElementCap) {
  return JoinSemilattice::validate(grid_poset(k, cap));
}

}  // namespace semilat
