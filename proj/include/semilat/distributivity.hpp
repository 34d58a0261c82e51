#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semilat/errors.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"

namespace semilat {

// Distributivity-style conditions checked on finite models. Each checker
// evaluates its defining sentence by exhaustive quantification, in the
// sentence's own quantifier order, and reports the first violating
// assignment it meets.
enum class NotionKind {
  kDistributiveLattice,
  kGS,        // joins decompose below the joinands
  kGSWeak,    // decomposition only has to land at or below the element
  kK,         // decomposition required only off both joinands
  kND,        // binary transfer of common-lower-bound inclusions
  kDVee,      // n-ary transfer of common-lower-bound inclusions
  kC,         // cover membership in the upper-lower closure
  kLR,        // closure form of the binary transfer
  kLRPoset,   // order-only closure form, no joins required
  kB,         // joins distribute over every existing finite meet
  kS,         // joins distribute over existing meets of bounded width
};

struct Notion {
  NotionKind kind;
  int arity = 0;  // only meaningful for kDVee, kC, kS

  std::string name() const {
    switch (kind) {
      case NotionKind::kDistributiveLattice: return "D_LATTICE";
      case NotionKind::kGS: return "GS";
      case NotionKind::kGSWeak: return "GSW";
      case NotionKind::kK: return "K";
      case NotionKind::kND: return "ND";
      case NotionKind::kDVee: return "DV" + std::to_string(arity);
      case NotionKind::kC: return "C" + std::to_string(arity);
      case NotionKind::kLR: return "LR";
      case NotionKind::kLRPoset: return "LRP";
      case NotionKind::kB: return "B";
      case NotionKind::kS: return "S" + std::to_string(arity);
    }
    return "?";
  }

  friend bool operator==(const Notion&, const Notion&) = default;
};

struct Binding {
  std::string var;
  ElementId value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// First violating assignment of a failed check: the scalar variables in
// quantifier order, plus the quantified subset where the sentence has one.
struct Witness {
  std::vector<Binding> bindings;
  std::optional<ElementSet> subset;

  ElementId at(const std::string& var) const {
    for (const Binding& b : bindings)
      if (b.var == var) return b.value;
    throw Error("witness has no binding for '" + var + "'");
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  Notion notion;
  bool holds = false;
  std::optional<Witness> witness;
};

namespace detail {

inline ElementSet meet_set(const Poset& p, ElementId a, ElementId b) {
  return p.down_set(a) & p.down_set(b);
}

// All nonempty subsets in ascending word order, optionally width-capped.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t max_width, Fn&& fn) {
  const std::uint64_t limit = ElementSet::universe(n).bits();
  for (std::uint64_t bits = 1; bits <= limit; ++bits) {
    const ElementSet s = ElementSet::from_bits(bits);
    if (s.count() > max_width) continue;
    if (!fn(s)) return;
  }
}

inline bool gs_decomposes(const JoinSemilattice& j, ElementId a, ElementId b, ElementId x) {
  const Poset& p = j.poset();
  for (ElementId ap : p.down_set(a) & p.down_set(x))
    for (ElementId bp : p.down_set(b) & p.down_set(x))
      if (j.join(ap, bp) == x) return true;
  return false;
}

}  // namespace detail

// x <= a v b always splits as x = a' v b' with a' <= a, b' <= b.
inline CheckReport check_gs(const JoinSemilattice& j) {
  const Poset& p = j.poset();
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      for (ElementId x = 0; x < j.size(); ++x) {
        if (!p.le(x, j.join(a, b))) continue;
        if (!detail::gs_decomposes(j, a, b, x))
          return {{NotionKind::kGS}, false, Witness{{{"a", a}, {"b", b}, {"x", x}}, {}}};
      }
    }
  }
  return {{NotionKind::kGS}, true, {}};
}

// Weakening that only asks for a' v b' <= x; holds exactly on downward
// directed models.
inline CheckReport check_gs_weak(const JoinSemilattice& j) {
  const Poset& p = j.poset();
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      for (ElementId x = 0; x < j.size(); ++x) {
        if (!p.le(x, j.join(a, b))) continue;
        const bool ok = !(p.down_set(a) & p.down_set(x)).empty() &&
                        !(p.down_set(b) & p.down_set(x)).empty();
        if (!ok)
          return {{NotionKind::kGSWeak}, false, Witness{{{"a", a}, {"b", b}, {"x", x}}, {}}};
      }
    }
  }
  return {{NotionKind::kGSWeak}, true, {}};
}

// Decomposition demanded only when x sits below neither joinand.
inline CheckReport check_k(const JoinSemilattice& j) {
  const Poset& p = j.poset();
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      for (ElementId x = 0; x < j.size(); ++x) {
        if (!p.le(x, j.join(a, b)) || p.le(x, a) || p.le(x, b)) continue;
        if (!detail::gs_decomposes(j, a, b, x))
          return {{NotionKind::kK}, false, Witness{{{"a", a}, {"b", b}, {"x", x}}, {}}};
      }
    }
  }
  return {{NotionKind::kK}, true, {}};
}

// If every common lower bound of h with a, and of h with b, lies below c,
// the same holds for h with a v b.
inline CheckReport check_nd(const JoinSemilattice& j) {
  const Poset& p = j.poset();
  for (ElementId h = 0; h < j.size(); ++h) {
    for (ElementId a = 0; a < j.size(); ++a) {
      for (ElementId b = 0; b < j.size(); ++b) {
        const ElementSet premise = detail::meet_set(p, h, a) | detail::meet_set(p, h, b);
        const ElementSet conclusion = detail::meet_set(p, h, j.join(a, b));
        for (ElementId c = 0; c < j.size(); ++c) {
          if (premise.subset_of(p.down_set(c)) && !conclusion.subset_of(p.down_set(c)))
            return {{NotionKind::kND},
                    false,
                    Witness{{{"h", h}, {"a", a}, {"b", b}, {"c", c}}, {}}};
        }
      }
    }
  }
  return {{NotionKind::kND}, true, {}};
}

// n-ary form of the transfer condition, quantified over joinand sets of
// width at most n.
inline CheckReport check_dvee_n(const JoinSemilattice& j, std::size_t n) {
  if (n < 1 || n > j.size())
    throw ArityOutOfRange("arity " + std::to_string(n) + " out of range for a model of size " +
                          std::to_string(j.size()));
  const Poset& p = j.poset();
  CheckReport out{{NotionKind::kDVee, static_cast<int>(n)}, true, {}};
  for (ElementId x = 0; x < j.size() && out.holds; ++x) {
    detail::for_each_subset(j.size(), n, [&](ElementSet joinands) {
      ElementSet premise;
      for (ElementId a : joinands) premise |= detail::meet_set(p, x, a);
      const ElementSet conclusion = detail::meet_set(p, x, j.join_of(joinands));
      for (ElementId c = 0; c < j.size(); ++c) {
        if (premise.subset_of(p.down_set(c)) && !conclusion.subset_of(p.down_set(c))) {
          out.holds = false;
          out.witness = Witness{{{"x", x}, {"c", c}}, joinands};
          return false;
        }
      }
      return true;
    });
  }
  return out;
}

// Anything under a join of at most n elements lies in the upper-lower
// closure of its pairwise common lower bounds with the joinands.
inline CheckReport check_c_n(const JoinSemilattice& j, std::size_t n) {
  if (n < 1 || n > j.size())
    throw ArityOutOfRange("arity " + std::to_string(n) + " out of range for a model of size " +
                          std::to_string(j.size()));
  const Poset& p = j.poset();
  CheckReport out{{NotionKind::kC, static_cast<int>(n)}, true, {}};
  for (ElementId x = 0; x < j.size() && out.holds; ++x) {
    detail::for_each_subset(j.size(), n, [&](ElementSet joinands) {
      if (!p.le(x, j.join_of(joinands))) return true;
      ElementSet lower;
      for (ElementId a : joinands) lower |= detail::meet_set(p, x, a);
      if (!p.bound_closure(lower, "ul").contains(x)) {
        out.holds = false;
        out.witness = Witness{{{"x", x}}, joinands};
        return false;
      }
      return true;
    });
  }
  return out;
}

// Closure form of the binary transfer condition.
inline CheckReport check_lr(const JoinSemilattice& j) {
  const Poset& p = j.poset();
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      for (ElementId c = 0; c < j.size(); ++c) {
        const ElementSet target = detail::meet_set(p, c, j.join(a, b));
        const ElementSet pieces = detail::meet_set(p, c, a) | detail::meet_set(p, c, b);
        if (!target.subset_of(p.bound_closure(pieces, "ul")))
          return {{NotionKind::kLR}, false, Witness{{{"a", a}, {"b", b}, {"c", c}}, {}}};
      }
    }
  }
  return {{NotionKind::kLR}, true, {}};
}

// Order-only version: instead of c with a v b, lower bounds of c together
// with all upper bounds of {a, b}. One inclusion holds in every poset and is
// asserted; only the other inclusion is a real test.
inline CheckReport check_lr_poset(const Poset& p) {
  for (ElementId a = 0; a < p.size(); ++a) {
    for (ElementId b = 0; b < p.size(); ++b) {
      for (ElementId c = 0; c < p.size(); ++c) {
        const ElementSet pieces = detail::meet_set(p, c, a) | detail::meet_set(p, c, b);
        const ElementSet closure = p.bound_closure(pieces, "ul");
        const ElementSet target = p.down_set(c) & p.lower_bounds(p.upper_bounds(ElementSet::of({a, b})));
        if (!closure.subset_of(target))
          throw Error("closure inclusion violated; the order kernel is broken");
        if (!target.subset_of(closure))
          return {{NotionKind::kLRPoset}, false, Witness{{{"a", a}, {"b", b}, {"c", c}}, {}}};
      }
    }
  }
  return {{NotionKind::kLRPoset}, true, {}};
}

namespace detail {

// Greatest lower bound of {x v a : a in A}, if any.
inline std::optional<ElementId> meet_of_joins(const JoinSemilattice& j, ElementId x,
                                              ElementSet joinands) {
  ElementSet joins;
  for (ElementId a : joinands) joins.insert(j.join(x, a));
  return j.poset().glb(joins);
}

inline CheckReport check_meet_distribution(const JoinSemilattice& j, std::size_t max_width,
                                           Notion notion) {
  CheckReport out{notion, true, {}};
  detail::for_each_subset(j.size(), max_width, [&](ElementSet a_set) {
    const auto meet = j.poset().glb(a_set);
    if (!meet) return true;
    for (ElementId x = 0; x < j.size(); ++x) {
      const auto lhs = meet_of_joins(j, x, a_set);
      if (!lhs || *lhs != j.join(x, *meet)) {
        out.holds = false;
        out.witness = Witness{{{"x", x}}, a_set};
        return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace detail

// Joins distribute over every existing meet, all widths at once.
inline CheckReport check_b(const JoinSemilattice& j) {
  return detail::check_meet_distribution(j, j.size(), {NotionKind::kB});
}

// Same with meets of width at most n.
inline CheckReport check_sn(const JoinSemilattice& j, std::size_t n) {
  if (n < 2) throw ArityOutOfRange("width for the bounded meet distribution law must be at least 2");
  return detail::check_meet_distribution(j, n, {NotionKind::kS, static_cast<int>(n)});
}

// Lattice distributive law; only meaningful on lattices.
inline CheckReport check_d_lattice(const JoinSemilattice& j) {
  if (!is_lattice(j)) throw NotALattice("distributive law needs a lattice");
  for (ElementId a = 0; a < j.size(); ++a) {
    for (ElementId b = 0; b < j.size(); ++b) {
      for (ElementId c = 0; c < j.size(); ++c) {
        if (*j.meet(a, j.join(b, c)) != j.join(*j.meet(a, b), *j.meet(a, c)))
          return {{NotionKind::kDistributiveLattice},
                  false,
                  Witness{{{"a", a}, {"b", b}, {"c", c}}, {}}};
      }
    }
  }
  return {{NotionKind::kDistributiveLattice}, true, {}};
}

// Re-evaluates the quantifier-free core of the notion at the reported
// assignment. True means the violation reproduces.
inline bool replay_witness(const JoinSemilattice& j, const CheckReport& report) {
  if (report.holds || !report.witness) return false;
  const Poset& p = j.poset();
  const Witness& w = *report.witness;
  switch (report.notion.kind) {
    case NotionKind::kGS: {
      const ElementId a = w.at("a"), b = w.at("b"), x = w.at("x");
      return p.le(x, j.join(a, b)) && !detail::gs_decomposes(j, a, b, x);
    }
    case NotionKind::kGSWeak: {
      const ElementId a = w.at("a"), b = w.at("b"), x = w.at("x");
      return p.le(x, j.join(a, b)) && ((p.down_set(a) & p.down_set(x)).empty() ||
                                       (p.down_set(b) & p.down_set(x)).empty());
    }
    case NotionKind::kK: {
      const ElementId a = w.at("a"), b = w.at("b"), x = w.at("x");
      return p.le(x, j.join(a, b)) && !p.le(x, a) && !p.le(x, b) &&
             !detail::gs_decomposes(j, a, b, x);
    }
    case NotionKind::kND: {
      const ElementId h = w.at("h"), a = w.at("a"), b = w.at("b"), c = w.at("c");
      const ElementSet premise = detail::meet_set(p, h, a) | detail::meet_set(p, h, b);
      return premise.subset_of(p.down_set(c)) &&
             !detail::meet_set(p, h, j.join(a, b)).subset_of(p.down_set(c));
    }
    case NotionKind::kDVee: {
      if (!w.subset || w.subset->empty() || w.subset->count() > std::size_t(report.notion.arity))
        return false;
      const ElementId x = w.at("x"), c = w.at("c");
      ElementSet premise;
      for (ElementId a : *w.subset) premise |= detail::meet_set(p, x, a);
      return premise.subset_of(p.down_set(c)) &&
             !detail::meet_set(p, x, j.join_of(*w.subset)).subset_of(p.down_set(c));
    }
    case NotionKind::kC: {
      if (!w.subset || w.subset->empty() || w.subset->count() > std::size_t(report.notion.arity))
        return false;
      const ElementId x = w.at("x");
      if (!p.le(x, j.join_of(*w.subset))) return false;
      ElementSet lower;
      for (ElementId a : *w.subset) lower |= detail::meet_set(p, x, a);
      return !p.bound_closure(lower, "ul").contains(x);
    }
    case NotionKind::kLR: {
      const ElementId a = w.at("a"), b = w.at("b"), c = w.at("c");
      const ElementSet pieces = detail::meet_set(p, c, a) | detail::meet_set(p, c, b);
      return !detail::meet_set(p, c, j.join(a, b)).subset_of(p.bound_closure(pieces, "ul"));
    }
    case NotionKind::kLRPoset: {
      const ElementId a = w.at("a"), b = w.at("b"), c = w.at("c");
      const ElementSet pieces = detail::meet_set(p, c, a) | detail::meet_set(p, c, b);
      const ElementSet target =
          p.down_set(c) & p.lower_bounds(p.upper_bounds(ElementSet::of({a, b})));
      return !target.subset_of(p.bound_closure(pieces, "ul"));
    }
    case NotionKind::kB:
    case NotionKind::kS: {
      if (!w.subset || w.subset->empty()) return false;
      if (report.notion.kind == NotionKind::kS &&
          w.subset->count() > std::size_t(report.notion.arity))
        return false;
      const auto meet = p.glb(*w.subset);
      if (!meet) return false;
      const ElementId x = w.at("x");
      const auto lhs = detail::meet_of_joins(j, x, *w.subset);
      return !lhs || *lhs != j.join(x, *meet);
    }
    case NotionKind::kDistributiveLattice: {
      const ElementId a = w.at("a"), b = w.at("b"), c = w.at("c");
      const auto left = j.meet(a, j.join(b, c));
      const auto right_a = j.meet(a, b);
      const auto right_b = j.meet(a, c);
      if (!left || !right_a || !right_b) return false;
      return *left != j.join(*right_a, *right_b);
    }
  }
  return false;
}

}  // namespace semilat
