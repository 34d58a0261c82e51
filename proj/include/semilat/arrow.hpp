#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"

namespace semilat {

// One cell of the arrow table. The candidate set is kept so absence can be
// certified: when no maximum exists, `certificate` names the two smallest
// maximal candidates, which are necessarily incomparable.
struct ArrowEntry {
  std::optional<ElementId> value;
  ElementSet candidates;
  std::optional<std::pair<ElementId, ElementId>> certificate;
};

inline ElementSet arrow_candidates(const JoinSemilattice& j, ElementId a, ElementId b) {
  const Poset& p = j.poset();
  ElementSet out;
  for (ElementId c = 0; c < j.size(); ++c)
    if ((p.down_set(a) & p.down_set(c)).subset_of(p.down_set(b))) out.insert(c);
  return out;
}

inline std::optional<ElementId> arrow(const JoinSemilattice& j, ElementId a, ElementId b) {
  return j.poset().greatest_of(arrow_candidates(j, a, b));
}

inline ArrowEntry arrow_entry(const JoinSemilattice& j, ElementId a, ElementId b) {
  ArrowEntry e;
  e.candidates = arrow_candidates(j, a, b);
  e.value = j.poset().greatest_of(e.candidates);
  if (!e.value) {
    auto it = j.poset().maximal_of(e.candidates).begin();
    const ElementId first = *it;
    ++it;
    e.certificate = std::pair{first, *it};
  }
  return e;
}

struct ArrowTable {
  std::size_t n = 0;
  std::vector<ArrowEntry> entries;

  const ArrowEntry& at(ElementId a, ElementId b) const { return entries[a * n + b]; }

  bool total() const {
    for (const ArrowEntry& e : entries)
      if (!e.value) return false;
    return true;
  }
};

inline ArrowTable arrow_table(const JoinSemilattice& j) {
  ArrowTable t{j.size(), {}};
  t.entries.reserve(j.size() * j.size());
  for (ElementId a = 0; a < j.size(); ++a)
    for (ElementId b = 0; b < j.size(); ++b) t.entries.push_back(arrow_entry(j, a, b));
  return t;
}

inline bool is_arrow_total(const JoinSemilattice& j) {
  for (ElementId a = 0; a < j.size(); ++a)
    for (ElementId b = 0; b < j.size(); ++b)
      if (!arrow(j, a, b)) return false;
  return true;
}

// Re-derives one table cell from the definition: a present value must be a
// candidate dominating every candidate, an absent one must come with two
// incomparable maximal candidates.
inline bool verify_arrow_entry(const JoinSemilattice& j, ElementId a, ElementId b,
                               const ArrowEntry& e) {
  const Poset& p = j.poset();
  const ElementSet candidates = arrow_candidates(j, a, b);
  if (e.candidates != candidates) return false;
  if (e.value) {
    if (!candidates.contains(*e.value)) return false;
    if (!(p.down_set(a) & p.down_set(*e.value)).subset_of(p.down_set(b))) return false;
    for (ElementId c : candidates)
      if (!p.le(c, *e.value)) return false;
    return !e.certificate;
  }
  if (!e.certificate) return false;
  const auto [c1, c2] = *e.certificate;
  const ElementSet maximal = p.maximal_of(candidates);
  return maximal.contains(c1) && maximal.contains(c2) && c1 != c2 && !p.le(c1, c2) &&
         !p.le(c2, c1);
}

inline bool verify_arrow_table(const JoinSemilattice& j, const ArrowTable& t) {
  if (t.n != j.size()) return false;
  for (ElementId a = 0; a < j.size(); ++a)
    for (ElementId b = 0; b < j.size(); ++b)
      if (!verify_arrow_entry(j, a, b, t.at(a, b))) return false;
  return true;
}

// How a subset sits inside an ambient model: join closure, closure under
// the ambient arrow, and the arrow computed intrinsically in the induced
// sub-join-semilattice. The intrinsic part is only meaningful when the
// subset is join-closed, and is skipped otherwise.
struct SubalgebraReport {
  ElementSet members;
  bool join_closed = false;
  std::vector<std::pair<ElementId, ElementId>> join_escapes;
  bool ambient_arrow_closed = false;
  std::vector<std::pair<ElementId, ElementId>> arrow_escapes;
  std::vector<std::pair<ElementId, ElementId>> ambient_undefined;
  std::optional<JoinSemilattice> sub;
  std::optional<ArrowTable> intrinsic;
};

inline SubalgebraReport closed_subalgebra_report(const JoinSemilattice& j, ElementSet s) {
  if (s.empty()) throw Error("subalgebra report needs a nonempty subset");
  SubalgebraReport r;
  r.members = s;

  for (ElementId a : s)
    for (ElementId b : s)
      if (!s.contains(j.join(a, b)) && a <= b) r.join_escapes.emplace_back(a, b);
  r.join_closed = r.join_escapes.empty();

  for (ElementId a : s) {
    for (ElementId b : s) {
      const auto value = arrow(j, a, b);
      if (!value)
        r.ambient_undefined.emplace_back(a, b);
      else if (!s.contains(*value))
        r.arrow_escapes.emplace_back(a, b);
    }
  }
  r.ambient_arrow_closed = r.arrow_escapes.empty() && r.ambient_undefined.empty();

  if (r.join_closed) {
    r.sub = j.restrict_to(s);
    r.intrinsic = arrow_table(*r.sub);
  }
  return r;
}

// On a lattice, the arrow must coincide, cell by cell and in definedness,
// with the maximum of {c : a meet c <= b}.
inline bool meet_relative_complement_agreement(const JoinSemilattice& j) {
  if (!is_lattice(j)) throw NotALattice("relative meet-complement needs a lattice");
  const Poset& p = j.poset();
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      ElementSet candidates;
      for (ElementId c = 0; c < j.size(); ++c)
        if (p.le(*j.meet(a, c), b)) candidates.insert(c);
      if (p.greatest_of(candidates) != arrow(j, a, b)) return false;
    }
  }
  return true;
}

}  // namespace semilat
