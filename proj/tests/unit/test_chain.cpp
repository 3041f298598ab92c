#include <doctest.h>

#include <map>

#include "mcat/chain.hpp"
#include "mcat/counting.hpp"
#include "mcat/error.hpp"
#include "mcat/tableaux.hpp"

using namespace mcat;

namespace {

// Independent generator: rates (not divided by m+1) written from the model
// description, letter by letter on strings.
std::map<std::string, Rational> rates_out(const std::string& w, const Rational& a, const Rational& b,
                                          const Rational& q) {
  std::map<std::string, Rational> out;
  auto add = [&](std::string t, const Rational& u) {
    if (u != 0) out[t] += u;
  };
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const std::string pair = w.substr(i, 2);
    std::string t = w;
    std::swap(t[i], t[i + 1]);
    if (pair == "DE" || pair == "DA" || pair == "AE") add(t, 1);
    if (pair == "ED" || pair == "AD" || pair == "EA") add(t, q);
  }
  if (w.front() == 'E') add("D" + w.substr(1), a);
  if (w.back() == 'D') add(w.substr(0, w.size() - 1) + "E", b);
  return out;
}

// pi Q = 0, sum pi = 1 by plain elimination on mpq_class.
std::map<std::string, Rational> oracle_stationary(int m, int r, const Rational& a, const Rational& b,
                                                  const Rational& q) {
  std::vector<std::string> states;
  for (const auto& w : all_words(m, r)) states.push_back(w.str());
  const std::size_t n = states.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[states[i]] = i;
  std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [t, u] : rates_out(states[i], a, b, q)) {
      mat[idx[t]][i] += u;
      mat[i][i] -= u;
    }
  }
  for (std::size_t j = 0; j <= n; ++j) mat[n - 1][j] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (mat[p][c] == 0) ++p;
    std::swap(mat[p], mat[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || mat[i][c] == 0) continue;
      const Rational f = mat[i][c] / mat[c][c];
      for (std::size_t j = c; j <= n; ++j) mat[i][j] -= f * mat[c][j];
    }
  }
  std::map<std::string, Rational> out;
  for (std::size_t i = 0; i < n; ++i) out[states[i]] = mat[i][n] / mat[i][i];
  return out;
}

Rational prob(const std::vector<WordMove>& moves, const std::string& target) {
  for (const auto& mv : moves) {
    if (mv.target.str() == target) return mv.probability;
  }
  return 0;
}

}  // namespace

TEST_CASE("transition examples") {
  const auto de = transitions(Word::parse("DE"), {1, 1, 0});
  REQUIRE(de.size() == 1);
  CHECK(de[0].target.str() == "ED");
  CHECK(de[0].probability == Rational(1, 3));

  const auto ae = transitions(Word::parse("AE"), {1, 1, 0});
  REQUIRE(ae.size() == 1);
  CHECK(ae[0].target.str() == "EA");
  CHECK(ae[0].probability == Rational(1, 3));

  const Rational a(2, 7);
  const Rational b(5, 3);
  const auto ed = transitions(Word::parse("ED"), {a, b, 0});
  CHECK(ed.size() == 2);
  CHECK(prob(ed, "DD") == a / 3);
  CHECK(prob(ed, "EE") == b / 3);

  // Reverse swaps appear at rate q.
  const auto ed_q = transitions(Word::parse("ED"), {1, 1, Rational(1, 2)});
  CHECK(prob(ed_q, "DE") == Rational(1, 6));
}

TEST_CASE("sector chains") {
  const auto c31 = build_sector_chain(3, 1, {1, 1, 0});
  CHECK(c31.states().size() == 12);
  const auto c11 = build_sector_chain(1, 1, {1, 1, 0});
  REQUIRE(c11.states().size() == 1);
  CHECK(c11.probability(Word::parse("A"), Word::parse("A")) == 1);
  const auto c20 = build_sector_chain(2, 0, {1, 1, 0});
  CHECK(c20.states().size() == 4);
  for (const auto& row : c20.matrix()) {
    Rational s = 0;
    for (const auto& [j, p] : row) s += p;
    CHECK(s == 1);
  }
  CHECK_THROWS_AS(build_sector_chain(2, 3, {1, 1, 0}), Error);
  CHECK_THROWS_AS(build_sector_chain(2, 1, {0, 1, 0}), Error);
}

TEST_CASE("stationary examples") {
  const auto pi = stationary(build_sector_chain(2, 0, {1, 1, 0}));
  std::map<std::string, Rational> got;
  for (const auto& [w, p] : pi) got[w.str()] = p;
  CHECK(got["DD"] == Rational(1, 5));
  CHECK(got["DE"] == Rational(2, 5));
  CHECK(got["ED"] == Rational(1, 5));
  CHECK(got["EE"] == Rational(1, 5));

  const auto a = stationary(build_sector_chain(1, 1, {1, 1, 0}));
  REQUIRE(a.size() == 1);
  CHECK(a[0].second == 1);

  const auto one = stationary(build_sector_chain(1, 0, {1, 1, 0}));
  REQUIRE(one.size() == 2);
  CHECK(one[0].second == Rational(1, 2));
  CHECK(one[1].second == Rational(1, 2));
}

TEST_CASE("partition function examples") {
  CHECK(partition_function(2, 0) == WeightPoly::monomial(2, 0) + WeightPoly::monomial(2, 1) +
                                        WeightPoly::monomial(1, 2) + WeightPoly::monomial(1, 1) +
                                        WeightPoly::monomial(0, 2));
  CHECK(partition_function(1, 1) == WeightPoly(1));
  CHECK(partition_function(3, 1).eval(1, 1) == 14);
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r <= m; ++r) CHECK(partition_function(m, r).eval(1, 1) == Rational(z0_count(m, r)));
  }
}

TEST_CASE("library stationary law matches the independent generator oracle") {
  const std::vector<ChainParams> params{{1, 1, 0}, {Rational(1, 2), 2, 0}, {3, 5, 0}, {2, Rational(1, 3), 1},
                                        {Rational(3, 4), Rational(2, 5), Rational(1, 2)}};
  for (int m = 1; m <= 4; ++m) {
    for (int r = 0; r <= m; ++r) {
      for (const auto& p : params) {
        const auto oracle = oracle_stationary(m, r, p.alpha, p.beta, p.q);
        for (const auto& [w, v] : stationary(build_sector_chain(m, r, p))) CHECK(v == oracle.at(w.str()));
      }
    }
  }
}

TEST_CASE("main theorem on small sectors, including the grid oracle example") {
  for (int m = 1; m <= 4; ++m) {
    const auto rep = verify_stationary_theorem(m, std::nullopt, default_grid());
    CHECK(rep.passed());
    CHECK(rep.points == 5);
  }
  const auto rep = verify_stationary_theorem(5, 1, default_grid());
  CHECK(rep.passed());
  CHECK(rep.sectors == std::vector<int>{1});
  // The same weights fail against a q > 0 chain, so the check has teeth.
  const auto pi = stationary(build_sector_chain(3, 1, {1, 1, 1}));
  const auto z = partition_function(3, 1).eval(1, 1);
  bool differs = false;
  for (const auto& [w, v] : pi) differs = differs || v != word_weight(w).eval(1, 1) / z;
  CHECK(differs);
}

TEST_CASE("ansatz recurrences") {
  const auto rep = verify_ansatz(5);
  CHECK(rep.passed());
  CHECK(rep.checks.size() == 5);
  for (const auto& [which, n] : rep.checks) CHECK(n > 0);
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("1/2,2;3,5");
  REQUIRE(g.size() == 2);
  CHECK(g[0].alpha == Rational(1, 2));
  CHECK(g[1].beta == 5);
  CHECK(default_grid().size() == 5);
  CHECK_THROWS_AS(parse_grid("1,"), Error);
  CHECK_THROWS_AS(parse_grid("0,1"), Error);
  CHECK_THROWS_AS(parse_grid(""), Error);
}

TEST_CASE("transition probabilities are nonnegative when rates fit under m+1") {
  // With alpha, beta, q <= 1 a state has at most m+1 units of outgoing rate.
  for (const ChainParams& p : {ChainParams{1, 1, 0}, ChainParams{1, 1, 1}, ChainParams{Rational(1, 2), 1, Rational(1, 3)}}) {
    for (int m = 1; m <= 5; ++m) {
      for (int r = 0; r <= m; ++r) {
        const auto chain = build_sector_chain(m, r, p);
        for (const auto& row : chain.matrix()) {
          for (const auto& [j, v] : row) CHECK(v >= 0);
        }
      }
    }
  }
  // At (3, 5) the self-loop of D at m = 1 goes negative; rows still sum to 1.
  const auto c = build_sector_chain(1, 0, {3, 5, 0});
  CHECK(c.probability(Word::parse("D"), Word::parse("D")) == Rational(-3, 2));
}
