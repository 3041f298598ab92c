#include <doctest.h>

#include <random>

#include "mcat/serialize.hpp"

using namespace mcat;

TEST_CASE("polynomial JSON round trip") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    WeightPoly p;
    for (int i = 0; i < 4; ++i) {
      p.add_term({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), static_cast<int>(rng() % 3)},
                 Integer(static_cast<long>(rng() % 1000)) * Integer("100000000000000000000") - 7);
    }
    CHECK(poly_from_json(to_json(p)) == p);
  }
}

TEST_CASE("tableau JSON carries word, shape, filling and weight") {
  const auto ts = enumerate_condensed(Word::parse("DEEAE"));
  const auto j = to_json(ts[0]);
  CHECK(j["word"] == "DEEAE");
  CHECK(j.contains("shape"));
  CHECK(j.contains("boundaryLabels"));
  CHECK(j.contains("filling"));
  CHECK(j["weight"]["a"] == ts[0].weight().a);
  CHECK(j["weight"]["b"] == ts[0].weight().b);
}

TEST_CASE("stationary CSV") {
  const auto chain = build_sector_chain(2, 0, {1, 1, 0});
  const auto csv = stationary_csv(stationary(chain));
  CHECK(csv == "word,probability\nDD,1/5\nDE,2/5\nED,1/5\nEE,1/5\n");
  const auto j = stationary_json(chain, stationary(chain));
  CHECK(j.dump() == stationary_json(chain, stationary(chain)).dump());
}

TEST_CASE("chain graph formats") {
  const auto chain = build_tableau_chain(2, 0);
  const auto csv = chain_graph(chain, "csv");
  CHECK(csv.rfind("source,target,rate,case\n", 0) == 0);
  const auto dot = chain_graph(chain, "dot");
  CHECK(dot.rfind("digraph", 0) == 0);
  const auto json = Json::parse(chain_graph(chain, "json"));
  CHECK(json["nodes"].size() == 5);
  CHECK_THROWS(chain_graph(chain, "xml"));
}

TEST_CASE("reports have check and passed fields") {
  const auto j = to_json(verify_ansatz(3));
  CHECK(j["check"] == "ansatz");
  CHECK(j["passed"] == true);
  const auto d = to_json(det_weight_check(Word::parse("DEEAE")));
  CHECK(d["passed"].is_boolean());
}
