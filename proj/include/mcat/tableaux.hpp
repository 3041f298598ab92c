#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mcat/core.hpp"
#include "mcat/poly.hpp"

namespace mcat {

enum class Cell : std::uint8_t { empty, alpha, beta, x };

char to_char(Cell cell);

/// alpha^a beta^b.
struct Monomial {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b}; }
};

enum class BoxType : std::uint8_t { DE, DA, AE, AA };

BoxType box_type(Letter row, Letter col);

/// Rule numbers for condensed tableaux (i-v plus the derived AA rule vi)
/// and for staircase tableaux (1-5).
struct Violation {
  int row = 0;
  int col = 0;
  int rule = 0;
  std::string message;
};

/// Condensed multi-Catalan tableau: a filling of shape_of(word) by alpha,
/// beta and empty boxes. Row i has exactly shape.parts[i] cells.
class CondensedTableau {
 public:
  CondensedTableau() = default;
  CondensedTableau(Word word, std::vector<std::vector<Cell>> rows);

  const Word& word() const { return word_; }
  const Shape& shape() const { return shape_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  Cell at(int row, int col) const { return rows_[row][col]; }
  BoxType type_at(int row, int col) const;

  /// Interior symbols times the boundary weight alpha^k beta^e.
  Monomial weight() const;
  Monomial interior_weight() const;

  /// Canonical serialization, e.g. "DEEAE:...b|a".
  std::string key() const;

  friend bool operator==(const CondensedTableau& a, const CondensedTableau& b) {
    return a.word_ == b.word_ && a.rows_ == b.rows_;
  }
  friend bool operator<(const CondensedTableau& a, const CondensedTableau& b) {
    return a.key() < b.key();
  }

 private:
  Word word_;
  Shape shape_;
  std::vector<std::vector<Cell>> rows_;
};

std::vector<Violation> validate(const CondensedTableau& t);

/// All condensed tableaux of the given type, sorted by key.
std::vector<CondensedTableau> enumerate_condensed(const Word& word);

/// Sum of weights over all tableaux of the word; weight of the empty word is 1.
WeightPoly word_weight(const Word& word);

/// How a staircase box decides what it "sees" to its right and below.
enum class StaircaseReading {
  /// An alpha lying in an A-row looks like x from its left, and a beta in an
  /// A-column looks like x from above. In bijection with condensed tableaux.
  a_lines_transparent,
  /// First symbol encountered, whatever its line. Not in bijection with the
  /// condensed form (kept for comparison).
  literal,
};

/// Staircase tableau of shape (m, m-1, ..., 1). Row p (top to bottom) has
/// m - p cells; its last cell is the diagonal, holding alpha, beta or x for
/// letter p of the type.
class StaircaseTableau {
 public:
  StaircaseTableau() = default;
  StaircaseTableau(Word type, std::vector<std::vector<Cell>> rows);

  const Word& type() const { return type_; }
  int size() const { return type_.length(); }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  Cell at(int row, int col) const { return rows_[row][col]; }

  /// Product of all alphas and betas, diagonal included.
  Monomial weight() const;
  std::string key() const;

  friend bool operator==(const StaircaseTableau& a, const StaircaseTableau& b) {
    return a.type_ == b.type_ && a.rows_ == b.rows_;
  }

 private:
  Word type_;
  std::vector<std::vector<Cell>> rows_;
};

std::vector<Violation> validate(const StaircaseTableau& t,
                                StaircaseReading reading = StaircaseReading::a_lines_transparent);

std::vector<StaircaseTableau> enumerate_staircase(
    const Word& word, StaircaseReading reading = StaircaseReading::a_lines_transparent);

/// Deletes the diagonal, the E-rows and the D-columns.
CondensedTableau condense(const StaircaseTableau& t);

std::string render_ascii(const CondensedTableau& t);
std::string render_ascii(const StaircaseTableau& t);

}  // namespace mcat
