#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcat/core.hpp"
#include "mcat/markov.hpp"
#include "mcat/poly.hpp"

namespace mcat {

struct ChainParams {
  Rational alpha = 1;
  Rational beta = 1;
  Rational q = 0;

  /// Throws Error(invalid_argument) unless alpha > 0, beta > 0, q >= 0.
  void check() const;
};

struct RatePoint {
  Rational alpha;
  Rational beta;

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// (1,1), (1/2,2), (2,1/2), (1/3,1/3), (3,5).
std::vector<RatePoint> default_grid();

/// "a/b,c/d;e,f" -> points. Throws Error(invalid_argument) on bad syntax.
std::vector<RatePoint> parse_grid(std::string_view text);

struct WordMove {
  Word target;
  Rational probability;
};

/// Every allowed move out of `word` with probability u/(m+1); the self-loop
/// is not listed.
std::vector<WordMove> transitions(const Word& word, const ChainParams& params);

/// Rows sum to exactly 1. The self-loop takes the residual 1 - sum(u)/(m+1),
/// which is negative when the outgoing rates exceed m+1 (e.g. beta = 5 at
/// m = 1); stationary vectors are unaffected.
class SectorChain {
 public:
  SectorChain(int m, int r, ChainParams params, std::vector<Word> states, TransitionMatrix p);

  int m() const { return m_; }
  int r() const { return r_; }
  const ChainParams& params() const { return params_; }
  const std::vector<Word>& states() const { return states_; }
  const TransitionMatrix& matrix() const { return p_; }
  std::size_t index_of(const Word& w) const;
  Rational probability(const Word& from, const Word& to) const;

 private:
  int m_;
  int r_;
  ChainParams params_;
  std::vector<Word> states_;
  std::map<Word, std::size_t> index_;
  TransitionMatrix p_;
};

/// Throws Error(not_irreducible) listing the strongly connected components
/// when the sector chain has more than one.
SectorChain build_sector_chain(int m, int r, const ChainParams& params);

using StationaryVector = std::vector<std::pair<Word, Rational>>;

StationaryVector stationary(const SectorChain& chain, SolveMethod method = SolveMethod::automatic);

/// Z^0_{m,r}: sum of word weights over the sector.
WeightPoly partition_function(int m, int r);

struct TheoremCounterexample {
  Word word;
  RatePoint point;
  Rational stationary;
  Rational predicted;
};

struct TheoremReport {
  int m = 0;
  std::vector<int> sectors;  // r values checked
  std::size_t points = 0;
  std::size_t comparisons = 0;
  std::vector<TheoremCounterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// Exact check of pi(X) = weight(X)/Z at q = 0 for every word of the sector
/// (all sectors of length m when r is empty) at every grid point.
TheoremReport verify_stationary_theorem(int m, std::optional<int> r,
                                        const std::vector<RatePoint>& grid);

enum class AnsatzCase { de, da, ae, leading_e, trailing_d };

std::string to_string(AnsatzCase c);

struct AnsatzFailure {
  Word word;
  AnsatzCase which;
  int position = 0;
  WeightPoly lhs;
  WeightPoly rhs;
};

struct AnsatzReport {
  int m_max = 0;
  std::size_t words = 0;
  std::map<AnsatzCase, std::size_t> checks;
  std::vector<AnsatzFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// The five weight recurrences with constant alpha*beta, for every applicable
/// factorisation of every word with 1 <= m <= m_max.
AnsatzReport verify_ansatz(int m_max);

}  // namespace mcat
