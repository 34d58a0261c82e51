#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semilat/distributivity.hpp"
#include "semilat/errors.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"

namespace semilat {

// Nonempty, down-closed, join-closed subset.
struct Ideal {
  ElementSet members;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

enum class FamilyVariant { kAll, kAllPlusEmpty, kFp };

// A set of ideals under inclusion. The empty set is admitted as a member
// only where the variant calls for it.
struct IdealFamily {
  FamilyVariant variant;
  std::vector<ElementSet> ideals;  // ascending by word value
  Poset order;                     // inclusion order, one node per ideal
};

inline bool is_ideal(const JoinSemilattice& j, ElementSet s) {
  if (s.empty()) return false;
  for (ElementId x : s) {
    if (!j.poset().down_set(x).subset_of(s)) return false;
    for (ElementId y : s)
      if (!s.contains(j.join(x, y))) return false;
  }
  return true;
}

inline Ideal principal_ideal(const JoinSemilattice& j, ElementId a) {
  return {j.poset().down_set(a)};
}

// Least ideal containing a nonempty seed: joins first, then everything
// below. In a finite model this is the principal ideal of the seed's join.
inline Ideal generated_ideal(const JoinSemilattice& j, ElementSet seed) {
  if (seed.empty()) throw Error("an ideal cannot be generated from an empty set");
  return principal_ideal(j, j.join_of(seed));
}

// Elementwise-join description of the ideal join. Downward directedness is
// required up front; the result is returned only when it really is the
// generated ideal, which the decomposition property guarantees but mere
// directedness does not (the diamond is the standard counterexample).
inline Ideal ideal_join_formula(const JoinSemilattice& j, const Ideal& i1, const Ideal& i2) {
  if (!is_downward_directed(j))
    throw NotDownwardDirected("the elementwise join formula needs a downward directed model");
  ElementSet joins;
  for (ElementId a : i1.members)
    for (ElementId b : i2.members) joins.insert(j.join(a, b));
  if (joins != generated_ideal(j, i1.members | i2.members).members)
    throw Error("elementwise joins do not form the generated ideal here; the formula only holds "
                "under the join decomposition property");
  return {joins};
}

namespace detail {

inline std::string ideal_label(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (ElementId e : s) {
    if (!first) out += ",";
    out += p.label(e);
    first = false;
  }
  return out + "}";
}

// Down-closed subsets, generated along a linear extension so each set is
// visited once.
template <typename Fn>
void for_each_down_set(const Poset& p, Fn&& fn) {
  std::vector<ElementId> order(p.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    const auto da = p.down_set(a).count(), db = p.down_set(b).count();
    return da != db ? da < db : a < b;
  });
  const auto descend = [&](auto&& self, std::size_t at, ElementSet chosen) -> void {
    if (at == order.size()) {
      fn(chosen);
      return;
    }
    const ElementId e = order[at];
    self(self, at + 1, chosen);
    if (p.down_set(e).without(e).subset_of(chosen)) self(self, at + 1, chosen.with(e));
  };
  descend(descend, 0, ElementSet{});
}

}  // namespace detail

// Inclusion order over an ideal list, each node labelled by its member set.
inline Poset family_poset(const JoinSemilattice& j, const std::vector<ElementSet>& ideals) {
  std::vector<std::string> labels;
  for (ElementSet s : ideals) labels.push_back(detail::ideal_label(j.poset(), s));
  std::vector<std::pair<std::string, std::string>> below;
  for (std::size_t a = 0; a < ideals.size(); ++a)
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (a != b && ideals[a].subset_of(ideals[b])) below.emplace_back(labels[a], labels[b]);
  return Poset::from_hasse(labels, below, kWordCapacity);
}

namespace detail {

inline IdealFamily make_family(const JoinSemilattice& j, FamilyVariant variant,
                               std::vector<ElementSet> ideals) {
  std::sort(ideals.begin(), ideals.end());
  Poset order = family_poset(j, ideals);
  return {variant, std::move(ideals), std::move(order)};
}

}  // namespace detail

inline IdealFamily all_ideals(const JoinSemilattice& j) {
  std::vector<ElementSet> found;
  detail::for_each_down_set(j.poset(), [&](ElementSet s) {
    if (is_ideal(j, s)) found.push_back(s);
  });
  return detail::make_family(j, FamilyVariant::kAll, std::move(found));
}

inline IdealFamily all_ideals_plus_empty(const JoinSemilattice& j) {
  IdealFamily base = all_ideals(j);
  std::vector<ElementSet> ideals = base.ideals;
  ideals.insert(ideals.begin(), ElementSet{});
  return detail::make_family(j, FamilyVariant::kAllPlusEmpty, std::move(ideals));
}

// Intersections of nonempty finite sets of principal ideals. The empty set
// shows up exactly when some elements share no lower bound, and is kept as
// the family's bottom in that case.
inline IdealFamily id_fp(const JoinSemilattice& j) {
  std::set<ElementSet> family;
  for (ElementId a = 0; a < j.size(); ++a) family.insert(j.poset().down_set(a));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ElementSet> snapshot(family.begin(), family.end());
    for (ElementSet a : snapshot)
      for (ElementSet b : snapshot) grew |= family.insert(a & b).second;
  }
  return detail::make_family(j, FamilyVariant::kFp,
                             std::vector<ElementSet>(family.begin(), family.end()));
}

// One characterization: a notion on the model against distributivity of an
// ideal family. The two sides are computed independently and must agree.
struct CharacterizationPair {
  std::string notion;
  FamilyVariant family;
  bool notion_holds = false;
  bool family_distributive = false;

  bool agree() const { return notion_holds == family_distributive; }
};

struct CharacterizationReport {
  CharacterizationPair gs_vs_ideals;
  CharacterizationPair k_vs_ideals_plus_empty;
  CharacterizationPair nd_vs_fp;

  bool all_agree() const {
    return gs_vs_ideals.agree() && k_vs_ideals_plus_empty.agree() && nd_vs_fp.agree();
  }
};

namespace detail {

inline bool family_is_distributive_lattice(const IdealFamily& f) {
  const JoinSemilattice fam = JoinSemilattice::validate(f.order);
  return is_lattice(fam) && check_d_lattice(fam).holds;
}

}  // namespace detail

inline CharacterizationReport verify_characterizations(const JoinSemilattice& j) {
  CharacterizationReport r;
  r.gs_vs_ideals = {"GS", FamilyVariant::kAll, check_gs(j).holds,
                    detail::family_is_distributive_lattice(all_ideals(j))};
  r.k_vs_ideals_plus_empty = {"K", FamilyVariant::kAllPlusEmpty, check_k(j).holds,
                              detail::family_is_distributive_lattice(all_ideals_plus_empty(j))};
  r.nd_vs_fp = {"ND", FamilyVariant::kFp, check_nd(j).holds,
                detail::family_is_distributive_lattice(id_fp(j))};
  return r;
}

}  // namespace semilat
