#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcat/rational.hpp"

namespace mcat {

/// Exponents of alpha^a beta^b q^c.
struct Exponent {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in alpha, beta, q with signed big-integer coefficients.
/// Terms are kept sorted by exponent; zero coefficients are never stored.
class WeightPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  WeightPoly() = default;
  WeightPoly(long constant);  // NOLINT: implicit from integer literals
  explicit WeightPoly(const Integer& constant);

  static WeightPoly monomial(int a, int b, int c = 0, const Integer& coeff = 1);
  static WeightPoly alpha() { return monomial(1, 0); }
  static WeightPoly beta() { return monomial(0, 1); }
  static WeightPoly q() { return monomial(0, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponent& e) const;

  /// Adds coeff * alpha^a beta^b q^c in place.
  void add_term(const Exponent& e, const Integer& coeff);

  WeightPoly& operator+=(const WeightPoly& other);
  WeightPoly& operator-=(const WeightPoly& other);
  WeightPoly& operator*=(const WeightPoly& other);
  WeightPoly& operator*=(const Integer& scalar);

  friend WeightPoly operator+(WeightPoly lhs, const WeightPoly& rhs) { return lhs += rhs; }
  friend WeightPoly operator-(WeightPoly lhs, const WeightPoly& rhs) { return lhs -= rhs; }
  friend WeightPoly operator*(const WeightPoly& lhs, const WeightPoly& rhs);
  friend WeightPoly operator*(WeightPoly lhs, const Integer& rhs) { return lhs *= rhs; }
  WeightPoly operator-() const;

  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

  Rational eval(const Rational& alpha, const Rational& beta, const Rational& q = 0) const;

  /// Sets the chosen variables to 1 and collects terms.
  WeightPoly specialize_to_one(bool alpha, bool beta, bool q) const;

  /// Coefficient of q^c as a polynomial in alpha, beta.
  WeightPoly q_slice(int c) const;

  /// Multiplies by alpha^a beta^b q^c.
  WeightPoly shifted(int a, int b, int c = 0) const;

  /// Exact quotient in Z[alpha, beta, q], or nullopt if the division leaves a
  /// remainder (or divisor is zero).
  std::optional<WeightPoly> divide_exact(const WeightPoly& divisor) const;

  /// Largest exponent in lexicographic (a, b, c) order; poly must be nonzero.
  const Exponent& leading_exponent() const;

  bool all_coefficients_nonnegative() const;

  /// Human-readable form, e.g. "a^2*b + a*b^2" (a = alpha, b = beta).
  std::string to_string() const;

 private:
  TermMap terms_;
};

using PolyMatrix = std::vector<std::vector<WeightPoly>>;

/// Fraction-free (Bareiss) determinant over Z[alpha, beta, q].
WeightPoly bareiss_determinant(PolyMatrix m);

}  // namespace mcat
