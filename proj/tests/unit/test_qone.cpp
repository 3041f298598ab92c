#include <doctest.h>

#include "mcat/error.hpp"
#include "mcat/qone.hpp"
#include "mcat/serialize.hpp"

using namespace mcat;

TEST_CASE("all-A word has one filling of weight 1") {
  for (int m = 1; m <= 4; ++m) {
    const auto ts = enumerate_alt(Word::parse(std::string(m, 'A')), RuleSet::standard());
    REQUIRE(ts.size() == 1);
    CHECK(alt_weight(ts[0], true) == WeightPoly(1));
  }
}

TEST_CASE("DE has three fillings") {
  const auto ts = enumerate_alt(Word::parse("DE"), RuleSet::standard());
  CHECK(ts.size() == 3);
  CHECK(alt_word_weight(Word::parse("DE"), RuleSet::standard(), true) ==
        WeightPoly::monomial(2, 1) + WeightPoly::monomial(1, 2) + WeightPoly::monomial(1, 1, 1));
  CHECK(alt_word_weight(Word::parse("DE"), RuleSet::standard(), false).eval(1, 1) == 3);
}

TEST_CASE("DDDEADEA contains a filling of weight a^6 b^6") {
  bool found = false;
  for (const auto& t : enumerate_alt(Word::parse("DDDEADEA"), RuleSet::standard())) {
    if (alt_weight(t, true) == WeightPoly::monomial(6, 6)) found = true;
    CHECK(validate_alt(t, RuleSet::standard()).empty());
  }
  CHECK(found);
}

TEST_CASE("conjecture examples") {
  CHECK(verify_conjecture(3, 1, RuleSet::standard(), default_grid()).passed());
  CHECK(verify_conjecture(1, 1, RuleSet::standard(), default_grid()).passed());
  const auto r0 = verify_conjecture(4, 0, RuleSet::standard(), default_grid());
  CHECK(r0.passed());
  REQUIRE(r0.one_species_total.has_value());
  CHECK(*r0.one_species_total == 120);
  CHECK(*r0.one_species_expected == 120);
}

TEST_CASE("q^0 slice reproduces multi-Catalan weights") {
  CHECK(q0_consistency(2, 0, RuleSet::standard()).passed());
  for (int m = 1; m <= 5; ++m) {
    for (int r = 0; r <= m; ++r) CHECK(q0_consistency(m, r, RuleSet::standard()).passed());
  }
}

TEST_CASE("a wrong rule set is caught") {
  RuleSet broken = RuleSet::standard();
  broken.name = "no-q";
  broken.de = {AltSymbol::alpha, AltSymbol::beta};
  const auto rep = verify_conjecture(2, 0, broken, default_grid());
  CHECK_FALSE(rep.passed());
  CHECK_FALSE(rep.mismatches.empty());
}

TEST_CASE("rule set JSON round trip and validation") {
  const auto s = RuleSet::standard();
  const auto back = RuleSet::from_json(s.to_json());
  CHECK(back.de == s.de);
  CHECK(back.da == s.da);
  CHECK(back.ae == s.ae);
  CHECK(back.patterns == s.patterns);
  CHECK_THROWS_AS(RuleSet::from_json(R"({"de":[],"da":["q"],"ae":["q"]})"), Error);
  CHECK_THROWS_AS(RuleSet::from_json(R"({"de":["u"],"da":["q"],"ae":["q"]})"), Error);
  CHECK_THROWS_AS(RuleSet::from_json("not json"), Error);
  CHECK_THROWS_AS(parse_alt_symbol("gamma"), Error);
}

TEST_CASE("sweep is deterministic and names the standard set") {
  const auto a = sweep_rulesets(3, default_grid(), candidate_rulesets());
  const auto b = sweep_rulesets(3, default_grid(), candidate_rulesets());
  REQUIRE(a.size() == candidate_rulesets().size());
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(a[0].rules.name == "standard");
  CHECK(a[0].passed);
}
