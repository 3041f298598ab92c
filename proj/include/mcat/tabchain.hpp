#pragma once

#include <string>
#include <vector>

#include "mcat/chain.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

enum class PointKind { de_corner, da_corner, ae_corner, right_leg, left_leg };

std::string to_string(PointKind kind);

/// A corner (row, col of the box) or a leg (row = col = -1).
struct TransitionPoint {
  PointKind kind = PointKind::de_corner;
  int row = -1;
  int col = -1;

  bool is_corner() const { return row >= 0; }
  friend bool operator==(const TransitionPoint&, const TransitionPoint&) = default;
};

struct TransitionPointSummary {
  int corners = 0;
  bool top_corner_beta = false;      // delta_beta
  bool bottom_corner_alpha = false;  // delta_alpha
  bool right_leg = false;
  bool left_leg = false;
};

/// Rate of a tableau move: 1, alpha or beta.
enum class MoveRate { one, alpha, beta };

std::string to_string(MoveRate rate);
Rational rate_value(MoveRate rate, const RatePoint& point);

/// alpha^a beta^b with signed exponents.
struct WeightRatio {
  int a = 0;
  int b = 0;

  friend bool operator==(const WeightRatio&, const WeightRatio&) = default;
};

struct TableauMove {
  CondensedTableau source;
  CondensedTableau target;
  TransitionPoint point;
  MoveRate rate = MoveRate::one;
  /// 1-7 as in the corner/leg case table; 0 for a leg move whose inserted
  /// line has length zero, where the table does not apply.
  int case_label = 0;

  WeightRatio observed_ratio() const;
};

/// Weight ratio target/source predicted by a case label (0 needs the point).
WeightRatio predicted_ratio(int case_label, PointKind kind);

std::vector<TransitionPoint> transition_points(const CondensedTableau& t);
TransitionPointSummary summarize(const CondensedTableau& t);

/// Throws Error(invalid_argument) if `p` is not a transition point of `t`.
TableauMove apply_transition(const CondensedTableau& t, const TransitionPoint& p);

struct TableauChain {
  int m = 0;
  int r = 0;
  std::vector<CondensedTableau> states;
  std::vector<std::vector<TableauMove>> moves;  // out of each state
  std::vector<std::vector<std::size_t>> targets;  // state index of each move target

  std::size_t index_of(const CondensedTableau& t) const;
  TransitionMatrix matrix(const RatePoint& point) const;
};

/// Every tableau of every word in the sector together with all its moves.
TableauChain build_tableau_chain(int m, int r);

struct BalanceFailure {
  CondensedTableau tableau;
  RatePoint point;
  Rational outflow;
  Rational inflow;
  Rational expected_outflow;
};

struct BalanceReport {
  int m = 0;
  int r = 0;
  std::size_t tableaux = 0;
  std::size_t points = 0;
  std::vector<BalanceFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// wt(T) * (total outgoing rate) == sum of wt(T') * rate(T' -> T), exactly,
/// with total outgoing rate == C + alpha*[right leg] + beta*[left leg].
BalanceReport verify_detailed_balance(int m, int r, const std::vector<RatePoint>& grid);

struct ProjectionFailure {
  std::string check;  // closure | case | rate | uniqueness | marginal
  std::string detail;
};

struct ProjectionReport {
  int m = 0;
  int r = 0;
  std::size_t tableaux = 0;
  std::size_t moves = 0;
  std::size_t points = 0;
  std::vector<ProjectionFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Closure and case-table consistency of every move, the rate and uniqueness
/// conditions of a lumping, and equality of the type marginals of the tableau-chain
/// stationary law with the two-species law at every grid point.
ProjectionReport verify_projection(int m, int r, const std::vector<RatePoint>& grid);

}  // namespace mcat
