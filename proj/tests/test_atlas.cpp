#include "semilat/atlas.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "semilat/canonical.hpp"
#include "semilat/distributivity.hpp"
#include "semilat/errors.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

using namespace semilat;

namespace {

std::set<std::string> enumerated_codes(std::size_t n) {
  std::set<std::string> codes;
  for (const auto& j : enumerate_jsl(n)) codes.insert(canonical_code(j));
  return codes;
}

std::set<std::string> oracle_codes(std::size_t n) {
  std::set<std::string> codes;
  for (const auto& r : oracle::all_labelled_join_semilattices(n))
    codes.insert(canonical_code(fixtures::from_relation(r)));
  return codes;
}

}  // namespace

TEST_CASE("enumeration matches the labelled brute-force oracle") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto mine = enumerated_codes(n);
    const auto theirs = oracle_codes(n);
    INFO("size " << n);
    CHECK(mine == theirs);
  }
  CHECK(enumerated_codes(1).size() == 1);
  CHECK(enumerated_codes(2).size() == 1);
  CHECK(enumerated_codes(3).size() == 2);
  CHECK(enumerated_codes(4).size() == 5);
}

TEST_CASE("five-element enumeration agrees with the oracle and the bottom bijection") {
  const auto mine = enumerated_codes(5);
  CHECK(mine.size() == 15);
  CHECK(mine == oracle_codes(5));

  std::set<std::string> bottomed;
  for (const auto& j : enumerate_jsl(5)) {
    const Poset with_bottom = fixtures::add_bottom(j.poset());
    const auto extended = JoinSemilattice::validate(with_bottom);
    CHECK(is_lattice(extended));
    bottomed.insert(canonical_code(with_bottom));
  }
  CHECK(bottomed.size() == 15);
}

TEST_CASE("six-element enumeration size is stable") {
  const auto models = enumerate_jsl(6);
  CHECK(models.size() == 53);
  for (const auto& j : models) CHECK(is_lattice(JoinSemilattice::validate(fixtures::add_bottom(j.poset()))));
}

TEST_CASE("enumeration emits canonical forms deterministically") {
  std::vector<std::string> first, second;
  for (const auto& j : enumerate_jsl(5)) {
    CHECK(is_canonical_form(j.poset()));
    CHECK(j.poset().label(0) == "e0");
    first.push_back(canonical_code(j));
  }
  for (const auto& j : enumerate_jsl(5)) second.push_back(canonical_code(j));
  CHECK(first == second);
  CHECK(std::set<std::string>(first.begin(), first.end()).size() == first.size());
}

TEST_CASE("enumeration rejects out-of-range sizes") {
  CHECK_THROWS_AS(enumerate_jsl(0), CapExceeded);
  CHECK_THROWS_AS(enumerate_jsl(8), CapExceeded);
  CHECK_THROWS_AS(enumerate_jsl(3, std::size_t{2}), CapExceeded);
}

TEST_CASE("shards are disjoint and jointly exhaustive") {
  for (const std::size_t depth : {1u, 2u, 3u}) {
    const auto shards = make_shards(6, depth);
    CHECK(shards.size() > 1);
    std::vector<std::string> stitched;
    for (const auto& shard : shards)
      enumerate_shard(shard,
                      [&](const JoinSemilattice& j) { stitched.push_back(canonical_code(j)); });
    std::vector<std::string> direct;
    for (const auto& j : enumerate_jsl(6)) direct.push_back(canonical_code(j));
    CHECK(stitched == direct);
  }

  const auto one = make_shards(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(one.front().prefix.empty());

  EnumerationShard bogus{4, {0b11}};
  CHECK_THROWS_AS(enumerate_shard(bogus, [](const JoinSemilattice&) {}), Error);
}

TEST_CASE("classification of the named small models") {
  const auto vee = classify(fixtures::vee());
  CHECK(vee.size == 3);
  CHECK(vee.code == canonical_code(fixtures::vee()));
  CHECK_FALSE(vee.flags.at("GS"));
  CHECK_FALSE(vee.flags.at("GSW"));
  CHECK(vee.flags.at("K"));
  CHECK(vee.flags.at("ND"));
  CHECK(vee.flags.at("LR"));
  CHECK(vee.flags.at("LRP"));
  CHECK(vee.flags.at("B"));
  CHECK(vee.flags.at("S2"));
  CHECK(vee.flags.at("S3"));
  CHECK(vee.flags.at("DV2"));
  CHECK(vee.flags.at("C3"));
  CHECK(vee.flags.at("ARROW_TOTAL"));
  CHECK_FALSE(vee.flags.at("LATTICE"));
  CHECK_FALSE(vee.flags.at("D_LATTICE"));
  CHECK_FALSE(vee.flags.at("DOWNWARD_DIRECTED"));

  const auto bh = classify(fixtures::three_atoms());
  CHECK_FALSE(bh.flags.at("GS"));
  CHECK_FALSE(bh.flags.at("K"));
  CHECK_FALSE(bh.flags.at("ND"));
  CHECK(bh.flags.at("B"));
  CHECK(bh.flags.at("S2"));
  CHECK(bh.flags.at("S4"));
  CHECK_FALSE(bh.flags.at("ARROW_TOTAL"));
  CHECK_FALSE(bh.flags.at("LATTICE"));

  const auto chain = classify(fixtures::chain(4));
  for (const auto& [name, value] : chain.flags) {
    INFO(name);
    CHECK(value);
  }
  CHECK(chain.failures.empty());
}

TEST_CASE("classification failures carry replayable witnesses") {
  for (const auto& j :
       {fixtures::vee(), fixtures::m3(), fixtures::three_atoms(), fixtures::pentagon_top()}) {
    const auto rec = classify(j);
    CHECK_FALSE(rec.failures.empty());
    for (const auto& report : rec.failures) {
      INFO(rec.code << " " << report.notion.name());
      CHECK_FALSE(report.holds);
      CHECK(replay_witness(j, report));
    }
  }
}

TEST_CASE("flag atoms resolve with arity clamping") {
  const auto vee = classify(fixtures::vee());
  CHECK(flag_value(vee, "S2"));
  CHECK(flag_value(vee, "S7") == vee.flags.at("B"));
  CHECK(flag_value(vee, "DV5") == vee.flags.at("ND"));
  CHECK(flag_value(vee, "C9") == vee.flags.at("ND"));
  CHECK(flag_value(vee, "DV1"));
  CHECK(flag_value(vee, "C1"));
  CHECK_THROWS_AS(flag_value(vee, "SHINY"), Error);

  const auto one = classify(enumerate_jsl(1).front());
  CHECK(flag_value(one, "S2"));
  CHECK(flag_value(one, "S6"));
  CHECK(flag_value(one, "DV3"));
}

TEST_CASE("predicates parse, evaluate and reject malformed input") {
  const auto vee = classify(fixtures::vee());
  const auto chain = classify(fixtures::chain(3));

  CHECK(parse_predicate("K & !GS").eval(vee));
  CHECK_FALSE(parse_predicate("K & !GS").eval(chain));
  CHECK(parse_predicate("GS | K & !GS").eval(vee));
  CHECK_FALSE(parse_predicate("!(K | GS)").eval(vee));
  CHECK(parse_predicate("  LATTICE | ARROW_TOTAL ").eval(vee));
  CHECK(parse_predicate("S2 & !S3 | B").eval(chain));

  CHECK_THROWS_AS(parse_predicate(""), ParseError);
  CHECK_THROWS_AS(parse_predicate("K &"), ParseError);
  CHECK_THROWS_AS(parse_predicate("(K"), ParseError);
  CHECK_THROWS_AS(parse_predicate("K GS"), ParseError);
  CHECK_THROWS_AS(parse_predicate("SHINY"), ParseError);
  CHECK_THROWS_AS(parse_predicate("S1"), ParseError);
  try {
    parse_predicate("K & SHINY");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("minimal countermodel searches") {
  const auto k_not_gs = find_minimal("K & !GS");
  CHECK(k_not_gs.searched_to == 3);
  REQUIRE(k_not_gs.models.size() == 1);
  CHECK(k_not_gs.models.front().code == canonical_code(fixtures::vee()));

  const auto b_not_nd = find_minimal("B & !ND");
  CHECK(b_not_nd.searched_to == 4);
  std::set<std::string> found;
  for (const auto& rec : b_not_nd.models) found.insert(rec.code);
  const std::set<std::string> expected = {canonical_code(fixtures::three_atoms()),
                                          canonical_code(fixtures::pentagon_top())};
  CHECK(found == expected);

  const auto impossible = find_minimal("ND & !K", 6);
  CHECK(impossible.models.empty());
  CHECK(impossible.searched_to == 6);
  CHECK(find_minimal("S2 & !S3", 6).models.empty());
  CHECK(find_minimal("ND & !ARROW_TOTAL", 6).models.empty());

  const auto not_b = find_minimal("!B", 5);
  CHECK(not_b.searched_to == 5);
  std::set<std::string> not_b_codes;
  for (const auto& rec : not_b.models) not_b_codes.insert(rec.code);
  CHECK(not_b_codes.count(canonical_code(fixtures::m3())) == 1);
}

TEST_CASE("the chain summary for size four is exact") {
  const auto summary = verify_chain(4);
  CHECK(summary.text() ==
        "atlas of join-semilattices up to size 4\n"
        "size 1: 1 models\n"
        "size 2: 1 models\n"
        "size 3: 2 models\n"
        "size 4: 5 models\n"
        "total: 9 models\n"
        "flag ARROW_TOTAL: 7\n"
        "flag B: 9\n"
        "flag C2: 6\n"
        "flag C3: 5\n"
        "flag DOWNWARD_DIRECTED: 5\n"
        "flag DV2: 6\n"
        "flag DV3: 5\n"
        "flag D_LATTICE: 5\n"
        "flag GS: 5\n"
        "flag GSW: 5\n"
        "flag K: 7\n"
        "flag LATTICE: 5\n"
        "flag LR: 7\n"
        "flag LRP: 7\n"
        "flag ND: 7\n"
        "flag S2: 8\n"
        "flag S3: 7\n"
        "flag S4: 5\n"
        "chain violations: 0\n");
}

TEST_CASE("chain verification is deterministic across workers") {
  const auto solo = verify_chain(6, 1);
  CHECK(solo.models_per_size == std::vector<std::size_t>{1, 1, 2, 5, 15, 53});
  CHECK(solo.text() == verify_chain(6, 1).text());
  CHECK(solo.text() == verify_chain(6, 4).text());
  CHECK(verify_chain(1).text() ==
        "atlas of join-semilattices up to size 1\n"
        "size 1: 1 models\n"
        "total: 1 models\n"
        "flag ARROW_TOTAL: 1\n"
        "flag B: 1\n"
        "flag DOWNWARD_DIRECTED: 1\n"
        "flag D_LATTICE: 1\n"
        "flag GS: 1\n"
        "flag GSW: 1\n"
        "flag K: 1\n"
        "flag LATTICE: 1\n"
        "flag LR: 1\n"
        "flag LRP: 1\n"
        "flag ND: 1\n"
        "chain violations: 0\n");
}
