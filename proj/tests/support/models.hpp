#pragma once

// Hand-built fixture models shared across test suites, plus adapters between
// the library types and the naive oracle types.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"

namespace fixtures {

using semilat::JoinSemilattice;
using semilat::Poset;

// Two incomparable elements under a common top.
inline Poset vee_poset() {
  return Poset::from_hasse({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}});
}

inline JoinSemilattice vee() { return JoinSemilattice::validate(vee_poset()); }

inline Poset chain_poset(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
  return Poset::from_hasse(labels, pairs);
}

inline JoinSemilattice chain(std::size_t n) { return JoinSemilattice::validate(chain_poset(n)); }

// Diamond: bottom, three incomparable middle elements, top.
inline Poset m3_poset() {
  return Poset::from_hasse({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline JoinSemilattice m3() { return JoinSemilattice::validate(m3_poset()); }

// Three incomparable atoms under a top; no bottom.
inline Poset three_atoms_poset() {
  return Poset::from_hasse({"a", "b", "c", "1"}, {{"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline JoinSemilattice three_atoms() { return JoinSemilattice::validate(three_atoms_poset()); }

// Pentagon with its bottom removed: a < b < t plus c < t.
inline Poset pentagon_top_poset() {
  return Poset::from_hasse({"a", "b", "c", "t"}, {{"a", "b"}, {"b", "t"}, {"c", "t"}});
}

inline JoinSemilattice pentagon_top() { return JoinSemilattice::validate(pentagon_top_poset()); }

// Cube of subsets of a three-element set: distributive, eight elements.
// The odd-rank elements n1, n2, n3 sit below a = n1 v n2, b = n1 v n3 and
// c = n2 v n3.
inline Poset cube_poset() {
  return Poset::from_hasse({"bot", "n1", "n2", "n3", "a", "b", "c", "top"},
                           {{"bot", "n1"},
                            {"bot", "n2"},
                            {"bot", "n3"},
                            {"n1", "a"},
                            {"n2", "a"},
                            {"n1", "b"},
                            {"n3", "b"},
                            {"n2", "c"},
                            {"n3", "c"},
                            {"a", "top"},
                            {"b", "top"},
                            {"c", "top"}});
}

inline JoinSemilattice cube() { return JoinSemilattice::validate(cube_poset()); }

inline oracle::Relation to_relation(const Poset& p) {
  oracle::Relation r(p.size());
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.le(static_cast<semilat::ElementId>(a), static_cast<semilat::ElementId>(b)))
        r.add(a, b);
  return r;
}

inline Poset from_relation(const oracle::Relation& r) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r.n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < r.n; ++a)
    for (std::size_t b = 0; b < r.n; ++b)
      if (a != b && r.le[a][b]) pairs.emplace_back(labels[a], labels[b]);
  return Poset::from_hasse(labels, pairs);
}

// Random poset: closure of a random acyclic edge set over a shuffled base.
inline Poset random_poset(std::mt19937& rng, std::size_t n, double edge_prob = 0.3) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::bernoulli_distribution flip(edge_prob);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (flip(rng)) pairs.emplace_back(labels[order[i]], labels[order[j]]);
  return Poset::from_hasse(labels, pairs);
}

// The model with a fresh bottom adjoined below all its minimal elements.
inline Poset add_bottom(const Poset& p) {
  std::vector<std::string> labels = p.labels();
  labels.push_back("_bot");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : p.cover_pairs()) pairs.emplace_back(p.label(a), p.label(b));
  for (semilat::ElementId m : p.minimal_of(p.universe())) pairs.emplace_back("_bot", p.label(m));
  return Poset::from_hasse(labels, pairs, semilat::kWordCapacity);
}

// Same order, elements presented in a shuffled sequence.
inline Poset relabelled(const Poset& p, std::mt19937& rng) {
  std::vector<std::string> labels = p.labels();
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : p.cover_pairs()) pairs.emplace_back(p.label(a), p.label(b));
  return Poset::from_hasse(labels, pairs, semilat::kWordCapacity);
}

}  // namespace fixtures
