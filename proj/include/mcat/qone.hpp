#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "mcat/chain.hpp"
#include "mcat/core.hpp"
#include "mcat/poly.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

enum class AltSymbol : std::uint8_t { alpha, alpha_hat, beta, beta_hat, q, q_hat, u, u_hat };

std::string to_string(AltSymbol s);
AltSymbol parse_alt_symbol(std::string_view name);

/// Which 2x2 arrangements of the q_hat/u_hat intersection grid are checked
/// against the two forbidden patterns.
enum class PatternScope {
  submatrix,    // any two hat-rows and any two hat-columns
  consecutive,  // adjacent hat-rows and adjacent hat-columns only
  none,
};

/// Admissible symbols for the boxes governed by the three "sees" rules, plus
/// the pattern scope. Loaded from {"de":[...],"da":[...],"ae":[...]}.
struct RuleSet {
  std::string name = "standard";
  std::vector<AltSymbol> de;
  std::vector<AltSymbol> da;
  std::vector<AltSymbol> ae;
  PatternScope patterns = PatternScope::submatrix;

  /// DE {alpha, beta, q}, DA {beta_hat, q}, AE {alpha_hat, q}.
  static RuleSet standard();
  static RuleSet from_json(std::string_view text);
  std::string to_json() const;

  /// Throws Error(invalid_argument) on empty sets or symbols outside
  /// {alpha, alpha_hat, beta, beta_hat, q}.
  void check() const;
};

/// The candidate interpretations swept by sweep_rulesets().
std::vector<RuleSet> candidate_rulesets();

/// Two-species alternative tableau on the staircase of size m. rows[p] has
/// m - p - 1 interior cells (the diagonal is implied by the type); cell
/// (p, j) lies in the column whose diagonal letter is m - 1 - j.
class AltTableau {
 public:
  AltTableau(Word type, std::vector<std::vector<AltSymbol>> rows);

  const Word& type() const { return type_; }
  int size() const { return type_.length(); }
  const std::vector<std::vector<AltSymbol>>& rows() const { return rows_; }
  /// Box in row letter p and column letter s, p < s.
  AltSymbol at(int p, int s) const { return rows_[p][size() - 1 - s]; }

  std::string key() const;

 private:
  Word type_;
  std::vector<std::vector<AltSymbol>> rows_;
};

std::vector<AltTableau> enumerate_alt(const Word& word, const RuleSet& rules);

/// Independent declarative check of a complete filling.
std::vector<Violation> validate_alt(const AltTableau& t, const RuleSet& rules);

/// Product of the symbols, diagonal included, with u = u_hat = 1 and hats
/// dropped. q and q_hat become q when track_q, else 1.
WeightPoly alt_weight(const AltTableau& t, bool track_q);

WeightPoly alt_word_weight(const Word& word, const RuleSet& rules, bool track_q);

std::string render_ascii(const AltTableau& t);

struct ConjectureMismatch {
  Word word;
  RatePoint point;
  Rational stationary;
  Rational predicted;
};

struct ConjectureReport {
  int m = 0;
  int r = 0;
  std::string ruleset;
  std::size_t points = 0;
  std::size_t words = 0;
  std::vector<ConjectureMismatch> mismatches;
  // r = 0 only: total tableau count at alpha = beta = q = 1 against (m+1)!
  std::optional<Integer> one_species_total;
  std::optional<Integer> one_species_expected;

  bool passed() const;
};

ConjectureReport verify_conjecture(int m, int r, const RuleSet& rules,
                                   const std::vector<RatePoint>& grid);

struct ConsistencyMismatch {
  Word word;
  WeightPoly q0_slice;
  WeightPoly multi_catalan;
};

struct ConsistencyReport {
  int m = 0;
  int r = 0;
  std::string ruleset;
  std::size_t words = 0;
  std::vector<ConsistencyMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// q^0 part of the alternative-tableaux generating function against the
/// multi-Catalan word weight, word by word.
ConsistencyReport q0_consistency(int m, int r, const RuleSet& rules);

struct SweepEntry {
  RuleSet rules;
  bool passed = false;
  std::string first_failure;  // "m=5 r=1 word=..." or empty
};

/// Runs verify_conjecture for every sector with m <= m_max for each candidate.
std::vector<SweepEntry> sweep_rulesets(int m_max, const std::vector<RatePoint>& grid,
                                       const std::vector<RuleSet>& candidates);

}  // namespace mcat
