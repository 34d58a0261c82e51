#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/sets.hpp"

namespace semilat {

// Finite partial order over labelled elements. The relation is stored fully
// closed: one down-set word and one up-set word per element, both reflexive.
class Poset {
 public:
  Poset() = default;

  // Builds the reflexive transitive closure of an arbitrary subrelation of
  // the intended order. Cover edges, redundant pairs and repeated pairs are
  // all accepted; each pair reads "first below second".
  static Poset from_hasse(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& below_pairs,
                          std::size_t cap = kDefaultElementCap) {
    if (labels.empty()) throw Error("a model needs at least one element");
    if (labels.size() > cap || cap > kWordCapacity)
      throw CapExceeded("element count " + std::to_string(labels.size()) +
                        " exceeds the cap of " + std::to_string(std::min(cap, kWordCapacity)));
    Poset p;
    p.labels_ = std::move(labels);
    const std::size_t n = p.labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (p.labels_[i] == p.labels_[j])
          throw Error("duplicate element label '" + p.labels_[i] + "'");
      }
    }

    std::vector<ElementSet> succ(n);  // direct successors from the input pairs
    for (const auto& [lo, hi] : below_pairs) {
      const ElementId a = p.index(lo);
      const ElementId b = p.index(hi);
      if (a != b) succ[a].insert(b);
    }

    p.up_.assign(n, ElementSet{});
    for (ElementId a = 0; a < n; ++a) p.up_[a] = reachable_from(a, succ);

    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b : p.up_[a]) {
        if (b != a && p.up_[b].contains(a))
          throw CycleError("order relation contains a cycle through '" + p.labels_[a] + "'",
                           p.trace_cycle(a, b, succ));
      }
    }

    p.down_.assign(n, ElementSet{});
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b : p.up_[a]) p.down_[b].insert(a);
    return p;
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(ElementId e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<ElementId> find(std::string_view label) const {
    for (ElementId e = 0; e < labels_.size(); ++e)
      if (labels_[e] == label) return e;
    return std::nullopt;
  }

  ElementId index(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw UnknownLabel("unknown element label '" + std::string(label) + "'",
                       std::string(label));
  }

  bool le(ElementId a, ElementId b) const { return up_[a].contains(b); }
  bool lt(ElementId a, ElementId b) const { return a != b && le(a, b); }

  ElementSet universe() const { return ElementSet::universe(size()); }
  ElementSet down_set(ElementId e) const { return down_[e]; }
  ElementSet up_set(ElementId e) const { return up_[e]; }

  // Common lower bounds of a subset; the empty subset yields every element.
  ElementSet lower_bounds(ElementSet s) const {
    ElementSet acc = universe();
    for (ElementId e : s) acc &= down_[e];
    return acc;
  }

  ElementSet upper_bounds(ElementSet s) const {
    ElementSet acc = universe();
    for (ElementId e : s) acc &= up_[e];
    return acc;
  }

  // Applies a bound-operator script left to right, e.g. "ul" maps S to the
  // lower bounds of the upper bounds of S.
  ElementSet bound_closure(ElementSet s, std::string_view script) const {
    if (script.empty()) throw Error("bound script must be nonempty");
    ElementSet acc = s;
    for (char op : script) {
      switch (op) {
        case 'l': acc = lower_bounds(acc); break;
        case 'u': acc = upper_bounds(acc); break;
        default: throw Error(std::string("bound script may only contain 'l' and 'u', got '") + op + "'");
      }
    }
    return acc;
  }

  std::optional<ElementId> lub(ElementSet s) const { return least_of(upper_bounds(s)); }
  std::optional<ElementId> glb(ElementSet s) const { return greatest_of(lower_bounds(s)); }

  std::optional<ElementId> least_of(ElementSet s) const {
    for (ElementId e : s)
      if (s.subset_of(up_[e])) return e;
    return std::nullopt;
  }

  std::optional<ElementId> greatest_of(ElementSet s) const {
    for (ElementId e : s)
      if (s.subset_of(down_[e])) return e;
    return std::nullopt;
  }

  ElementSet maximal_of(ElementSet s) const {
    ElementSet out;
    for (ElementId e : s)
      if ((up_[e] & s) == ElementSet::single(e)) out.insert(e);
    return out;
  }

  ElementSet minimal_of(ElementSet s) const {
    ElementSet out;
    for (ElementId e : s)
      if ((down_[e] & s) == ElementSet::single(e)) out.insert(e);
    return out;
  }

  // Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<ElementId, ElementId>> cover_pairs() const {
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (ElementId a = 0; a < size(); ++a) {
      const ElementSet strictly_above = up_[a].without(a);
      for (ElementId b : strictly_above) {
        if ((down_[b] & strictly_above) == ElementSet::single(b)) covers.emplace_back(a, b);
      }
    }
    return covers;
  }

  // Induced subposet on `members`, keeping labels. Element ids are renumbered
  // in ascending order of the original ids.
  Poset restrict_to(ElementSet members) const {
    Poset sub;
    std::vector<ElementId> old_ids;
    for (ElementId e : members) {
      old_ids.push_back(e);
      sub.labels_.push_back(labels_[e]);
    }
    const std::size_t m = old_ids.size();
    sub.up_.assign(m, ElementSet{});
    sub.down_.assign(m, ElementSet{});
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (le(old_ids[i], old_ids[j])) {
          sub.up_[i].insert(static_cast<ElementId>(j));
          sub.down_[j].insert(static_cast<ElementId>(i));
        }
      }
    }
    return sub;
  }

 private:
  static ElementSet reachable_from(ElementId start, const std::vector<ElementSet>& succ) {
    ElementSet seen = ElementSet::single(start);
    ElementSet frontier = seen;
    while (!frontier.empty()) {
      ElementSet next;
      for (ElementId e : frontier) next |= succ[e];
      frontier = next.minus(seen);
      seen |= frontier;
    }
    return seen;
  }

  // Rebuilds one concrete cycle a -> ... -> b -> ... -> a over the input
  // edges, for the error message.
  std::vector<std::string> trace_cycle(ElementId a, ElementId b,
                                       const std::vector<ElementSet>& succ) const {
    auto path = [&](ElementId from, ElementId to) {
      std::vector<ElementId> parent(size(), from);
      ElementSet seen = ElementSet::single(from);
      std::deque<ElementId> queue{from};
      while (!queue.empty()) {
        const ElementId cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (ElementId nxt : succ[cur]) {
          if (!seen.contains(nxt)) {
            seen.insert(nxt);
            parent[nxt] = cur;
            queue.push_back(nxt);
          }
        }
      }
      std::vector<ElementId> rev{to};
      while (rev.back() != from) rev.push_back(parent[rev.back()]);
      std::reverse(rev.begin(), rev.end());
      return rev;
    };

    std::vector<std::string> cycle;
    for (ElementId e : path(a, b)) cycle.push_back(labels_[e]);
    auto back = path(b, a);
    for (std::size_t i = 1; i < back.size(); ++i) cycle.push_back(labels_[back[i]]);
    return cycle;
  }

  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

}  // namespace semilat
