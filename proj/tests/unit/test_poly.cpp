#include <doctest.h>

#include <random>

#include "mcat/poly.hpp"

using namespace mcat;

namespace {

WeightPoly random_poly(std::mt19937& rng) {
  WeightPoly p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    p.add_term({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 2)},
               Integer(static_cast<long>(rng() % 11) - 5));
  }
  return p;
}

// Cofactor expansion along the first row: an independent determinant oracle.
WeightPoly laplace(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  WeightPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<WeightPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const auto term = m[0][j] * laplace(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

TEST_CASE("ring examples") {
  const auto a = WeightPoly::alpha();
  const auto b = WeightPoly::beta();
  CHECK((a + b).to_string() == "a + b");
  CHECK(a * b * (a + b) == WeightPoly::monomial(2, 1) + WeightPoly::monomial(1, 2));
  CHECK(((a + b) * Integer(0)).is_zero());
  CHECK(((a + b) * Integer(0)).terms().empty());
}

TEST_CASE("evaluation examples") {
  const auto p = WeightPoly::monomial(2, 1) + WeightPoly::monomial(1, 2);
  CHECK(p.eval(1, 1, 0) == 2);
  const auto dee_ae = WeightPoly::monomial(4, 4) + WeightPoly::monomial(3, 4) + WeightPoly::monomial(2, 4);
  CHECK(dee_ae.eval(1, 1, 0) == 3);
  CHECK(WeightPoly::alpha().eval(Rational(2, 3), 5, 0) == Rational(2, 3));
  CHECK(dee_ae.to_string() == "a^4*b^4 + a^3*b^4 + a^2*b^4");
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  std::mt19937 rng(42);
  const Rational points[][3] = {{1, 1, 0}, {Rational(1, 2), 2, 1}, {Rational(2, 3), Rational(5, 7), Rational(3)}};
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto s = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + s == p + (q + s));
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK((p - p).is_zero());
    CHECK(p * WeightPoly(1) == p);
    CHECK((p * WeightPoly(0)).is_zero());
    for (const auto& pt : points) {
      CHECK((p * q).eval(pt[0], pt[1], pt[2]) == p.eval(pt[0], pt[1], pt[2]) * q.eval(pt[0], pt[1], pt[2]));
      CHECK((p + q).eval(pt[0], pt[1], pt[2]) == p.eval(pt[0], pt[1], pt[2]) + q.eval(pt[0], pt[1], pt[2]));
    }
    if (!q.is_zero()) {
      const auto quotient = (p * q).divide_exact(q);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == p);
    }
    CHECK(p.specialize_to_one(true, true, true).eval(7, 9, 11) == p.eval(1, 1, 1));
    WeightPoly rebuilt;
    for (int c = 0; c <= 2; ++c) rebuilt += p.q_slice(c).shifted(0, 0, c);
    CHECK(rebuilt == p);
  }
}

TEST_CASE("divide_exact rejects remainders and shifted rejects negative exponents") {
  const auto a = WeightPoly::alpha();
  const auto b = WeightPoly::beta();
  CHECK_FALSE((a + b).divide_exact(a).has_value());
  CHECK_FALSE(a.divide_exact(WeightPoly()).has_value());
  CHECK(a.shifted(2, 1) == WeightPoly::monomial(3, 1));
  CHECK_THROWS(b.shifted(-1, 0));
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    PolyMatrix m(n, std::vector<WeightPoly>(n));
    for (auto& row : m) {
      for (auto& e : row) {
        // Sparse entries so that zero pivots and row swaps happen.
        e = rng() % 3 == 0 ? WeightPoly() : random_poly(rng);
      }
    }
    CHECK(bareiss_determinant(m) == laplace(m));
  }
  CHECK(bareiss_determinant({}) == WeightPoly(1));
}
