#include <doctest.h>

#include <map>
#include <random>

#include "mcat/error.hpp"
#include "mcat/linalg.hpp"
#include "mcat/markov.hpp"

using namespace mcat;

namespace {

bool solves(const SparseIntegerMatrix& a, const std::vector<Integer>& b, const std::vector<Rational>& x) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s = 0;
    for (const auto& [j, v] : a[i]) s += Rational(v) * x[j];
    if (s != Rational(b[i])) return false;
  }
  return true;
}

// Random chain on n states with a Hamiltonian cycle, so it is irreducible.
TransitionMatrix random_chain(std::mt19937& rng, std::size_t n) {
  TransitionMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::size_t, Integer>> raw{{(i + 1) % n, 1 + rng() % 5}};
    for (int extra = 0; extra < 2; ++extra) {
      const std::size_t j = rng() % n;
      if (j != (i + 1) % n) raw.emplace_back(j, rng() % 4);
    }
    std::map<std::size_t, Integer> merged;
    Integer total = 0;
    for (const auto& [j, w] : raw) {
      merged[j] += w;
      total += w;
    }
    for (const auto& [j, w] : merged) {
      if (w == 0) continue;
      Rational v(w, total);
      v.canonicalize();
      p[i].emplace_back(j, v);
    }
  }
  return p;
}

}  // namespace

TEST_CASE("rational reconstruction") {
  // 1/2 mod 101 is 51.
  auto r = rational_reconstruction(51, 101);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(1, 2));
  const Integer m("1000000007");
  for (const Rational want : {Rational(-3, 7), Rational(5, 11), Rational(0), Rational(123, 1)}) {
    Integer num = want.get_num();
    Integer inv;
    Integer den = want.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    Integer u = (num * inv) % m;
    if (u < 0) u += m;
    auto got = rational_reconstruction(u, m);
    REQUIRE(got.has_value());
    CHECK(*got == want);
  }
}

TEST_CASE("p-adic lifting agrees with Gaussian elimination") {
  std::mt19937 rng(11);
  int solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    SparseIntegerMatrix a(n);
    RationalMatrix dense(n, n);
    std::vector<Integer> b(n);
    std::vector<Rational> bq(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() % 2 == 0 || i == j) {
          const Integer v = static_cast<long>(rng() % 2001) - 1000;
          if (v == 0) continue;
          a[i].emplace_back(j, v);
          dense(i, j) = v;
        }
      }
      b[i] = static_cast<long>(rng() % 200) - 100;
      bq[i] = b[i];
    }
    const auto exact = solve_rational(dense, bq);
    const auto lifted = solve_padic(a, b, [&](const std::vector<Rational>& x) { return solves(a, b, x); });
    REQUIRE(exact.has_value() == lifted.has_value());
    if (exact) {
      CHECK(*exact == *lifted);
      ++solved;
    }
  }
  CHECK(solved > 30);
}

TEST_CASE("singular systems") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  CHECK_FALSE(solve_rational(a, {1, 1}).has_value());
  SparseIntegerMatrix s{{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}};
  CHECK_FALSE(solve_padic(s, {1, 1}, [](const std::vector<Rational>&) { return true; }).has_value());
}

TEST_CASE("stationary law: rational and p-adic paths agree and are certified") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = random_chain(rng, 2 + rng() % 60);
    REQUIRE(is_irreducible(p));
    const auto x = solve_stationary(p, SolveMethod::rational);
    const auto y = solve_stationary(p, SolveMethod::padic);
    CHECK(x == y);
    CHECK(is_stationary(p, x));
    for (const auto& v : x) CHECK(v > 0);
  }
}

TEST_CASE("two-state chain by hand") {
  // P = [[1/2, 1/2], [1/3, 2/3]] has pi = (2/5, 3/5).
  TransitionMatrix p{{{0, Rational(1, 2)}, {1, Rational(1, 2)}}, {{0, Rational(1, 3)}, {1, Rational(2, 3)}}};
  const auto pi = solve_stationary(p);
  CHECK(pi == std::vector<Rational>{Rational(2, 5), Rational(3, 5)});
  CHECK_FALSE(is_stationary(p, {Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("strongly connected components") {
  // 0 <-> 1, 2 -> 0, 3 alone.
  TransitionMatrix p{{{1, 1}}, {{0, 1}}, {{0, 1}}, {{3, 1}}};
  const auto scc = strongly_connected_components(p);
  REQUIRE(scc.size() == 3);
  CHECK(scc[0] == std::vector<std::size_t>{0, 1});
  CHECK(scc[1] == std::vector<std::size_t>{2});
  CHECK(scc[2] == std::vector<std::size_t>{3});
  CHECK_FALSE(is_irreducible(p));
}
