#include <doctest.h>

#include <map>
#include <set>

#include "mcat/tableaux.hpp"

using namespace mcat;

namespace {

Monomial mono(int a, int b) { return {a, b}; }

std::multiset<Monomial> weights(const std::vector<CondensedTableau>& ts) {
  std::multiset<Monomial> out;
  for (const auto& t : ts) out.insert(t.weight());
  return out;
}

// Every filling of the shape by {., a, b}, kept when validate() finds nothing:
// an enumeration oracle that shares nothing with the backtracking search.
std::vector<CondensedTableau> brute_force(const Word& w) {
  const auto s = shape_of(w);
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < s.rows(); ++i) {
    for (int j = 0; j < s.parts[i]; ++j) boxes.emplace_back(i, j);
  }
  std::vector<CondensedTableau> out;
  std::vector<int> digits(boxes.size(), 0);
  while (true) {
    std::vector<std::vector<Cell>> rows;
    for (int len : s.parts) rows.emplace_back(len, Cell::empty);
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      rows[boxes[k].first][boxes[k].second] = static_cast<Cell>(digits[k]);
    }
    CondensedTableau t(w, rows);
    if (validate(t).empty()) out.push_back(t);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == 3) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

CondensedTableau weight66_tableau() {
  for (const auto& t : enumerate_condensed(Word::parse("DDDEADEA"))) {
    if (t.weight() == mono(6, 6)) return t;
  }
  FAIL("no tableau of weight a^6 b^6");
  return {};
}

}  // namespace

TEST_CASE("DEEAE has three tableaux") {
  const auto ts = enumerate_condensed(Word::parse("DEEAE"));
  CHECK(ts.size() == 3);
  CHECK(weights(ts) == std::multiset<Monomial>{mono(4, 4), mono(3, 4), mono(2, 4)});
  CHECK(word_weight(Word::parse("DEEAE")) ==
        WeightPoly::monomial(4, 4) + WeightPoly::monomial(3, 4) + WeightPoly::monomial(2, 4));
}

TEST_CASE("small words") {
  CHECK(enumerate_condensed(Word::parse("AAA")).size() == 1);
  const auto de = enumerate_condensed(Word::parse("DE"));
  REQUIRE(de.size() == 2);
  CHECK(weights(de) == std::multiset<Monomial>{mono(2, 1), mono(1, 2)});
  CHECK(word_weight(Word::parse("D")) == WeightPoly::alpha());
  CHECK(word_weight(Word::parse("E")) == WeightPoly::beta());
  CHECK(word_weight(Word::parse("A")) == WeightPoly(1));
  CHECK(word_weight(Word::parse("DE")) == WeightPoly::monomial(2, 1) + WeightPoly::monomial(1, 2));
  const auto ae = enumerate_condensed(Word::parse("AE"));
  REQUIRE(ae.size() == 1);
  CHECK(ae[0].at(0, 0) == Cell::alpha);
  CHECK(ae[0].weight() == mono(1, 1));
  CHECK(word_weight(Word()) == WeightPoly(1));
}

TEST_CASE("staircase examples") {
  const auto d = enumerate_staircase(Word::parse("D"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].at(0, 0) == Cell::alpha);
  CHECK(d[0].weight() == mono(1, 0));
  const auto a = enumerate_staircase(Word::parse("A"));
  REQUIRE(a.size() == 1);
  const auto c = condense(a[0]);
  CHECK(c.shape().box_count() == 0);
  CHECK(c.rows() == std::vector<std::vector<Cell>>{{}});
}

TEST_CASE("DDDEADEA has a tableau of shape (4,4,4,2,2,0) and weight a^6 b^6") {
  const auto ts = enumerate_condensed(Word::parse("DDDEADEA"));
  CHECK(ts.size() == 8);
  const auto t = weight66_tableau();
  CHECK(t.shape().parts == std::vector<int>{4, 4, 4, 2, 2, 0});
  // It comes from a staircase tableau of the same weight.
  bool found = false;
  for (const auto& s : enumerate_staircase(Word::parse("DDDEADEA"))) {
    if (condense(s) == t) {
      found = true;
      CHECK(s.weight() == mono(6, 6));
    }
  }
  CHECK(found);
}

TEST_CASE("validate accepts enumerations and rejects perturbations") {
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r <= m; ++r) {
      for (const auto& w : all_words(m, r)) {
        for (const auto& t : enumerate_condensed(w)) CHECK(validate(t).empty());
        for (const auto& t : enumerate_staircase(w)) CHECK(validate(t).empty());
      }
    }
  }

  // Empty DE corner violates rule iii (numbered 3 here).
  const auto empty_de = CondensedTableau(Word::parse("DE"), {{Cell::empty}});
  const auto v = validate(empty_de);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == 3);
  CHECK(v[0].row == 0);
  CHECK(v[0].col == 0);

  // Deleting any alpha of that tableau breaks it.
  const auto t = weight66_tableau();
  int alphas = 0;
  for (int i = 0; i < t.shape().rows(); ++i) {
    for (int j = 0; j < t.shape().parts[i]; ++j) {
      if (t.at(i, j) != Cell::alpha) continue;
      ++alphas;
      auto rows = t.rows();
      rows[i][j] = Cell::empty;
      CHECK_FALSE(validate(CondensedTableau(t.word(), rows)).empty());
    }
  }
  CHECK(alphas > 0);

  // x never belongs in a condensed tableau.
  CHECK_FALSE(validate(CondensedTableau(Word::parse("DE"), {{Cell::x}})).empty());
}

TEST_CASE("backtracking matches the brute-force filling oracle") {
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r <= m; ++r) {
      for (const auto& w : all_words(m, r)) {
        if (shape_of(w).box_count() > 7) continue;
        auto a = enumerate_condensed(w);
        auto b = brute_force(w);
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("staircase and condensed are in weight- and type-preserving bijection") {
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r <= m; ++r) {
      for (const auto& w : all_words(m, r)) {
        const auto stair = enumerate_staircase(w);
        const auto cond = enumerate_condensed(w);
        std::set<std::string> images;
        for (const auto& s : stair) {
          const auto c = condense(s);
          CHECK(c.word() == w);
          CHECK(c.weight() == s.weight());
          images.insert(c.key());
        }
        std::set<std::string> keys;
        for (const auto& c : cond) keys.insert(c.key());
        CHECK(images.size() == stair.size());
        CHECK(images == keys);
      }
    }
  }
}

TEST_CASE("the literal staircase reading is not in bijection") {
  // Reading an alpha in an A-row as alpha (not x) lets an extra box fill.
  const auto w = Word::parse("DDA");
  CHECK(enumerate_staircase(w, StaircaseReading::literal).size() == 2);
  CHECK(enumerate_condensed(w).size() == 1);
  CHECK(enumerate_staircase(w).size() == 1);
}

TEST_CASE("ascii rendering") {
  const auto ts = enumerate_condensed(Word::parse("DE"));
  const auto text = render_ascii(ts[0]);
  CHECK(text.find("D |") != std::string::npos);
  CHECK(text.find('E') != std::string::npos);
  const auto st = render_ascii(enumerate_staircase(Word::parse("DE"))[0]);
  CHECK_FALSE(st.empty());
}
