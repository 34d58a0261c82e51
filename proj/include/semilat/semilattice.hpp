#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/poset.hpp"
#include "semilat/sets.hpp"

namespace semilat {

// Poset in which every pair has a least upper bound, with the binary join
// tabulated. Meets are always derived from the order on demand.
class JoinSemilattice {
 public:
  // Checks the join-semilattice property and tabulates joins. Raises
  // NotAJoinSemilattice naming one offending pair otherwise.
  static JoinSemilattice validate(Poset p) {
    const std::size_t n = p.size();
    JoinSemilattice j;
    j.join_.assign(n * n, 0);
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        const ElementSet pair = ElementSet::of({a, b});
        const ElementSet ubs = p.upper_bounds(pair);
        if (ubs.empty())
          throw NotAJoinSemilattice("elements '" + p.label(a) + "' and '" + p.label(b) +
                                        "' have no upper bound",
                                    p.label(a), p.label(b));
        const auto least = p.least_of(ubs);
        if (!least)
          throw NotAJoinSemilattice("elements '" + p.label(a) + "' and '" + p.label(b) +
                                        "' have no least upper bound",
                                    p.label(a), p.label(b));
        j.join_[a * n + b] = *least;
      }
    }
    j.poset_ = std::move(p);
    j.top_ = j.size() ? j.poset_.greatest_of(j.poset_.universe()).value() : 0;
    return j;
  }

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(ElementId e) const { return poset_.label(e); }
  bool le(ElementId a, ElementId b) const { return poset_.le(a, b); }

  ElementId join(ElementId a, ElementId b) const { return join_[a * size() + b]; }

  ElementId join_of(ElementSet s) const {
    ElementId acc = s.first();
    for (ElementId e : s) acc = join(acc, e);
    return acc;
  }

  std::optional<ElementId> meet(ElementId a, ElementId b) const {
    return poset_.glb(ElementSet::of({a, b}));
  }

  std::optional<ElementId> meet_of(ElementSet s) const { return poset_.glb(s); }

  // Every finite join-semilattice has a greatest element.
  ElementId top() const { return top_; }

  // Sub-join-semilattice induced on `members`. Raises NotJoinClosed if some
  // join of two members escapes the subset.
  JoinSemilattice restrict_to(ElementSet members) const {
    for (ElementId a : members)
      for (ElementId b : members)
        if (!members.contains(join(a, b)))
          throw NotJoinClosed("join of '" + label(a) + "' and '" + label(b) +
                                  "' leaves the subset",
                              label(a), label(b));
    return validate(poset_.restrict_to(members));
  }

 private:
  JoinSemilattice() = default;

  Poset poset_;
  std::vector<ElementId> join_;
  ElementId top_ = 0;
};

inline bool is_downward_directed(const JoinSemilattice& j) {
  const std::size_t n = j.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (j.poset().lower_bounds(ElementSet::of({a, b})).empty()) return false;
  return true;
}

inline bool is_lattice(const JoinSemilattice& j) {
  const std::size_t n = j.size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (!j.meet(a, b)) return false;
  return true;
}

// Distributive law over all triples. Only meaningful on lattices; raises
// NotALattice otherwise.
inline bool is_distributive_lattice(const JoinSemilattice& j) {
  if (!is_lattice(j)) throw NotALattice("model is not a lattice");
  const std::size_t n = j.size();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      for (ElementId c = 0; c < n; ++c) {
        const ElementId left = *j.meet(a, j.join(b, c));
        const ElementId right = j.join(*j.meet(a, b), *j.meet(a, c));
        if (left != right) return false;
      }
    }
  }
  return true;
}

}  // namespace semilat
