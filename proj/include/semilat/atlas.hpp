#pragma once

#include <atomic>
#include <cctype>
#include <charconv>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "semilat/arrow.hpp"
#include "semilat/canonical.hpp"
#include "semilat/distributivity.hpp"
#include "semilat/errors.hpp"
#include "semilat/ideals.hpp"
#include "semilat/poset.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/sets.hpp"

namespace semilat {

inline constexpr std::size_t kEnumerationCap = 7;

// Everything classify() determines about one model: a canonical identifier,
// one boolean per flag name, and the failure reports whose witnesses replay.
struct SpectrumRecord {
  std::string code;
  std::size_t size = 0;
  std::map<std::string, bool> flags;
  std::vector<CheckReport> failures;
};

namespace detail {

inline std::optional<std::size_t> flag_arity(std::string_view name, std::string_view stem) {
  if (name.size() <= stem.size() || name.substr(0, stem.size()) != stem) return std::nullopt;
  const std::string_view digits = name.substr(stem.size());
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

inline bool known_flag(std::string_view name) {
  for (const char* fixed : {"GS", "GSW", "K", "ND", "LR", "LRP", "B", "LATTICE", "D_LATTICE",
                            "DOWNWARD_DIRECTED", "ARROW_TOTAL"}) {
    if (name == fixed) return true;
  }
  if (const auto k = flag_arity(name, "S")) return *k >= 2;
  if (const auto k = flag_arity(name, "DV")) return *k >= 1;
  if (const auto k = flag_arity(name, "C")) return *k >= 1;
  return false;
}

}  // namespace detail

// Resolves a flag atom against a record. Arities beyond what the record
// stores collapse along finite coincidences: S(k) past the model size is
// S(size) which is B, and DV(k)/C(k) for k at least 2 agree with ND.
inline bool flag_value(const SpectrumRecord& rec, std::string_view name) {
  if (const auto it = rec.flags.find(std::string(name)); it != rec.flags.end())
    return it->second;
  if (const auto k = detail::flag_arity(name, "S"); k && *k >= 2)
    return rec.size >= 2 ? rec.flags.at("S" + std::to_string(rec.size)) : rec.flags.at("B");
  const auto dv = detail::flag_arity(name, "DV");
  const auto c = dv ? dv : detail::flag_arity(name, "C");
  if (c) return *c >= 2 ? rec.flags.at("ND") : true;
  throw Error("unknown flag '" + std::string(name) + "'");
}

// Runs every checker on the model and cross-validates the results against
// the implication chain and the ideal-family characterizations before
// handing the record back. A failed cross-check is not a property of the
// model; it means some checker is wrong, so it surfaces as ChainViolation.
inline SpectrumRecord classify(const JoinSemilattice& j) {
  SpectrumRecord rec;
  rec.code = canonical_code(j);
  rec.size = j.size();

  const auto put = [&rec](const CheckReport& report) {
    rec.flags[report.notion.name()] = report.holds;
    if (!report.holds) rec.failures.push_back(report);
  };
  put(check_gs(j));
  put(check_gs_weak(j));
  put(check_k(j));
  put(check_nd(j));
  put(check_lr(j));
  put(check_lr_poset(j.poset()));
  put(check_b(j));
  for (std::size_t k = 2; k <= rec.size; ++k) put(check_sn(j, k));
  for (std::size_t k = 2; k <= 3 && k <= rec.size; ++k) {
    put(check_dvee_n(j, k));
    put(check_c_n(j, k));
  }

  const bool lattice = is_lattice(j);
  rec.flags["LATTICE"] = lattice;
  if (lattice)
    put(check_d_lattice(j));
  else
    rec.flags["D_LATTICE"] = false;
  rec.flags["DOWNWARD_DIRECTED"] = is_downward_directed(j);
  rec.flags["ARROW_TOTAL"] = is_arrow_total(j);

  const auto flag = [&rec](const std::string& name) { return rec.flags.at(name); };
  const auto require = [&rec](bool ok, const std::string& what) {
    if (!ok) throw ChainViolation("implication chain violated on " + rec.code, rec.code, what);
  };

  require(!flag("GS") || flag("K"), "GS holds but K fails");
  require(flag("K") == flag("ND"), "K and ND disagree");
  require(flag("ND") == flag("LR"), "ND and LR disagree");
  require(flag("ND") == flag("LRP"), "ND and LRP disagree");
  require(flag("ND") == flag("ARROW_TOTAL"), "ND and arrow totality disagree");
  require(!flag("ND") || flag("B"), "ND holds but B fails");
  require(flag("GSW") == flag("DOWNWARD_DIRECTED"), "GSW and downward directedness disagree");
  require(flag("GS") == (flag("K") && flag("DOWNWARD_DIRECTED")),
          "GS differs from K plus downward directedness");
  for (std::size_t k = 2; k <= rec.size; ++k) {
    const std::string sk = "S" + std::to_string(k);
    require(!flag("B") || flag(sk), "B holds but " + sk + " fails");
    if (k < rec.size)
      require(!flag("S" + std::to_string(k + 1)) || flag(sk),
              sk + " fails below a holding S" + std::to_string(k + 1));
  }
  if (rec.size >= 2)
    require(flag("B") == flag("S" + std::to_string(rec.size)),
            "B and the full-size S disagree");
  for (std::size_t k = 2; k <= 3 && k <= rec.size; ++k) {
    require(flag("DV" + std::to_string(k)) == flag("ND"),
            "DV" + std::to_string(k) + " and ND disagree");
    require(flag("C" + std::to_string(k)) == flag("ND"),
            "C" + std::to_string(k) + " and ND disagree");
  }
  if (lattice) {
    require(flag("DOWNWARD_DIRECTED"), "a lattice reported as not downward directed");
    require(flag("D_LATTICE") == flag("ND"), "lattice distributivity and ND disagree");
    require(flag("D_LATTICE") == flag("GS"), "lattice distributivity and GS disagree");
  }
  require(verify_characterizations(j).all_agree(), "an ideal-family characterization disagrees");

  return rec;
}

// A chunk of the enumeration: the down-set choices for the first `prefix`
// non-initial elements are pinned, everything deeper is explored normally.
struct EnumerationShard {
  std::size_t size = 0;
  std::vector<std::uint64_t> prefix;
};

namespace detail {

// Grows models one element at a time, each new element maximal at the moment
// of insertion, so element order is always a linear extension. The chosen
// strict down-set must be down-closed and closed under the joins that
// already exist; under those rules every pair of elements either has a join
// or has no upper bound at all, and the final forced top turns the poset
// into a join-semilattice with nothing left to verify.
struct JslGrowth {
  std::size_t n;
  std::vector<ElementSet> down;
  std::vector<ElementSet> up;

  explicit JslGrowth(std::size_t size) : n(size) {}

  bool admissible(std::uint64_t mask) const {
    const std::size_t i = down.size();
    if (mask >> i) return false;
    const ElementSet d = ElementSet::from_bits(mask);
    if (i + 1 == n && d != ElementSet::universe(i)) return false;
    for (const ElementId e : d)
      if (!down[e].subset_of(d.with(e))) return false;
    for (const ElementId a : d) {
      for (const ElementId b : d) {
        if (b <= a) continue;
        const ElementSet uppers = up[a] & up[b];
        if (uppers.empty()) continue;
        std::optional<ElementId> least;
        for (const ElementId u : uppers)
          if (uppers.subset_of(up[u])) least = u;
        if (!least || !d.contains(*least)) return false;
      }
    }
    return true;
  }

  void push(std::uint64_t mask) {
    const ElementId e = static_cast<ElementId>(down.size());
    const ElementSet d = ElementSet::from_bits(mask);
    down.push_back(d.with(e));
    up.push_back(ElementSet::single(e));
    for (const ElementId a : d) up[a].insert(e);
  }

  void pop() {
    const ElementId e = static_cast<ElementId>(down.size() - 1);
    down.pop_back();
    up.pop_back();
    for (auto& u : up) u.erase(e);
  }

  JoinSemilattice build() const {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t e = 0; e < n; ++e) labels.push_back("e" + std::to_string(e));
    for (ElementId b = 0; b < n; ++b)
      for (const ElementId a : down[b].without(b)) pairs.emplace_back(labels[a], labels[b]);
    return JoinSemilattice::validate(Poset::from_hasse(labels, pairs, kWordCapacity));
  }

  template <typename Fn>
  void descend(Fn& fn) {
    if (down.size() == n) {
      const JoinSemilattice j = build();
      if (is_canonical_form(j.poset())) fn(j);
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << down.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!admissible(mask)) continue;
      push(mask);
      descend(fn);
      pop();
    }
  }
};

inline void check_enumeration_size(std::size_t n, std::size_t cap) {
  if (n < 1 || n > cap || cap > kWordCapacity)
    throw CapExceeded("enumeration size " + std::to_string(n) + " outside 1.." +
                      std::to_string(std::min(cap, kWordCapacity)));
}

}  // namespace detail

// Calls `fn` once per isomorphism class of n-element join-semilattices, in a
// deterministic order, with each model already in canonical form.
template <typename Fn>
  requires std::invocable<Fn&, const JoinSemilattice&>
void enumerate_jsl(std::size_t n, Fn&& fn, std::size_t cap = kEnumerationCap) {
  detail::check_enumeration_size(n, cap);
  detail::JslGrowth growth(n);
  growth.push(0);
  growth.descend(fn);
}

inline std::vector<JoinSemilattice> enumerate_jsl(std::size_t n,
                                                  std::size_t cap = kEnumerationCap) {
  std::vector<JoinSemilattice> out;
  enumerate_jsl(n, [&out](const JoinSemilattice& j) { out.push_back(j); }, cap);
  return out;
}

// Splits the size-n enumeration into disjoint, jointly exhaustive shards by
// pinning the first `depth` down-set choices. Concatenating the shards in
// the returned order reproduces the enumeration order exactly.
inline std::vector<EnumerationShard> make_shards(std::size_t n, std::size_t depth,
                                                 std::size_t cap = kEnumerationCap) {
  detail::check_enumeration_size(n, cap);
  const std::size_t pinned = std::min(depth, n - 1);
  std::vector<EnumerationShard> shards;
  detail::JslGrowth growth(n);
  growth.push(0);
  std::vector<std::uint64_t> prefix;

  const auto walk = [&](const auto& self) -> void {
    if (prefix.size() == pinned) {
      shards.push_back({n, prefix});
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << growth.down.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!growth.admissible(mask)) continue;
      growth.push(mask);
      prefix.push_back(mask);
      self(self);
      prefix.pop_back();
      growth.pop();
    }
  };
  walk(walk);
  return shards;
}

template <typename Fn>
void enumerate_shard(const EnumerationShard& shard, Fn&& fn,
                     std::size_t cap = kEnumerationCap) {
  detail::check_enumeration_size(shard.size, cap);
  detail::JslGrowth growth(shard.size);
  growth.push(0);
  for (const std::uint64_t mask : shard.prefix) {
    if (growth.down.size() >= shard.size || !growth.admissible(mask))
      throw Error("shard prefix does not name a growth branch");
    growth.push(mask);
  }
  growth.descend(fn);
}

// A boolean combination of flag atoms: `!` binds tightest, then `&`, then
// `|`, with parentheses for grouping. Atom names follow the flag vocabulary.
class Predicate {
 public:
  bool eval(const SpectrumRecord& rec) const { return eval_node(*root_, rec); }
  const std::string& text() const { return text_; }

 private:
  struct Node {
    enum class Kind { kAtom, kNot, kAnd, kOr } kind;
    std::string atom;
    std::unique_ptr<Node> lhs;
    std::unique_ptr<Node> rhs;
  };

  static bool eval_node(const Node& node, const SpectrumRecord& rec) {
    switch (node.kind) {
      case Node::Kind::kAtom:
        return flag_value(rec, node.atom);
      case Node::Kind::kNot:
        return !eval_node(*node.lhs, rec);
      case Node::Kind::kAnd:
        return eval_node(*node.lhs, rec) && eval_node(*node.rhs, rec);
      case Node::Kind::kOr:
        return eval_node(*node.lhs, rec) || eval_node(*node.rhs, rec);
    }
    return false;
  }

  std::unique_ptr<Node> root_;
  std::string text_;

  friend Predicate parse_predicate(std::string_view text);
};

inline Predicate parse_predicate(std::string_view text) {
  struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& message) const {
      throw ParseError(message, 1, pos + 1);
    }
    void skip() {
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    using Node = Predicate::Node;
    using NodePtr = std::unique_ptr<Node>;
    static NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
      auto n = std::make_unique<Node>();
      n->kind = kind;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      return n;
    }

    NodePtr parse_or() {
      auto lhs = parse_and();
      while (eat('|')) lhs = make(Node::Kind::kOr, std::move(lhs), parse_and());
      return lhs;
    }
    NodePtr parse_and() {
      auto lhs = parse_unary();
      while (eat('&')) lhs = make(Node::Kind::kAnd, std::move(lhs), parse_unary());
      return lhs;
    }
    NodePtr parse_unary() {
      if (eat('!')) return make(Node::Kind::kNot, parse_unary());
      if (eat('(')) {
        auto inner = parse_or();
        if (!eat(')')) fail("expected ')'");
        return inner;
      }
      skip();
      const std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      if (pos == start) fail("expected a flag name");
      const std::string_view name = s.substr(start, pos - start);
      if (!detail::known_flag(name)) {
        pos = start;
        fail("unknown flag '" + std::string(name) + "'");
      }
      auto n = make(Node::Kind::kAtom);
      n->atom = std::string(name);
      return n;
    }
  };

  Parser p{text};
  Predicate out;
  out.root_ = p.parse_or();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input after predicate");
  out.text_ = std::string(text);
  return out;
}

// All models of the smallest size satisfying the predicate; empty with the
// searched bound when nothing within the cap matches.
struct MinimalSearch {
  std::vector<SpectrumRecord> models;
  std::size_t searched_to = 0;
};

inline MinimalSearch find_minimal(const Predicate& predicate,
                                  std::size_t max_n = kEnumerationCap,
                                  std::size_t cap = kEnumerationCap) {
  detail::check_enumeration_size(max_n, cap);
  MinimalSearch result;
  for (std::size_t n = 1; n <= max_n; ++n) {
    result.searched_to = n;
    enumerate_jsl(n, [&](const JoinSemilattice& j) {
      const SpectrumRecord rec = classify(j);
      if (predicate.eval(rec)) result.models.push_back(rec);
    }, cap);
    if (!result.models.empty()) return result;
  }
  return result;
}

inline MinimalSearch find_minimal(std::string_view predicate_text,
                                  std::size_t max_n = kEnumerationCap,
                                  std::size_t cap = kEnumerationCap) {
  return find_minimal(parse_predicate(predicate_text), max_n, cap);
}

// Aggregate of one full chain-verification run. classify() has already
// thrown on any inconsistency by the time a record lands here, so a summary
// that exists at all reports zero violations; the counts make runs
// comparable byte for byte.
struct ChainSummary {
  std::size_t max_size = 0;
  std::vector<std::size_t> models_per_size;
  std::map<std::string, std::size_t> flag_counts;

  std::size_t total() const {
    std::size_t sum = 0;
    for (const std::size_t c : models_per_size) sum += c;
    return sum;
  }

  std::string text() const {
    std::string out = "atlas of join-semilattices up to size " + std::to_string(max_size) + "\n";
    for (std::size_t n = 1; n <= max_size; ++n)
      out += "size " + std::to_string(n) + ": " +
             std::to_string(models_per_size[n - 1]) + " models\n";
    out += "total: " + std::to_string(total()) + " models\n";
    for (const auto& [name, count] : flag_counts)
      out += "flag " + name + ": " + std::to_string(count) + "\n";
    out += "chain violations: 0\n";
    return out;
  }
};

namespace detail {

inline void fold_record(ChainSummary& summary, const SpectrumRecord& rec) {
  summary.models_per_size[rec.size - 1] += 1;
  for (const auto& [name, value] : rec.flags)
    if (value) summary.flag_counts[name] += 1;
}

}  // namespace detail

// Classifies every model of size 1..n; classify() throws ChainViolation on
// the first cross-check failure, so completing the run is the verification.
// Work is split over `workers` threads by enumeration shards; the merged
// summary is identical for any worker count.
inline ChainSummary verify_chain(std::size_t n, std::size_t workers = 1,
                                 std::size_t cap = kEnumerationCap) {
  detail::check_enumeration_size(n, cap);
  ChainSummary summary;
  summary.max_size = n;
  summary.models_per_size.assign(n, 0);

  std::vector<EnumerationShard> shards;
  for (std::size_t size = 1; size <= n; ++size)
    for (auto& shard : make_shards(size, size >= 5 ? 3 : 0, cap))
      shards.push_back(std::move(shard));

  if (workers <= 1) {
    for (const auto& shard : shards)
      enumerate_shard(shard,
                      [&](const JoinSemilattice& j) { detail::fold_record(summary, classify(j)); },
                      cap);
    return summary;
  }

  std::vector<ChainSummary> partial(shards.size());
  for (auto& p : partial) {
    p.max_size = n;
    p.models_per_size.assign(n, 0);
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  const auto drain = [&] {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= shards.size()) return;
        enumerate_shard(shards[i],
                        [&](const JoinSemilattice& j) { detail::fold_record(partial[i], classify(j)); },
                        cap);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (const auto& p : partial) {
    for (std::size_t i = 0; i < n; ++i) summary.models_per_size[i] += p.models_per_size[i];
    for (const auto& [name, count] : p.flag_counts) summary.flag_counts[name] += count;
  }
  return summary;
}

}  // namespace semilat
