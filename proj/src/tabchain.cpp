#include "mcat/tabchain.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "mcat/error.hpp"

namespace mcat {

std::string to_string(PointKind kind) {
  switch (kind) {
    case PointKind::de_corner: return "DE corner";
    case PointKind::da_corner: return "DA corner";
    case PointKind::ae_corner: return "AE corner";
    case PointKind::right_leg: return "right leg";
    case PointKind::left_leg: return "left leg";
  }
  return "?";
}

std::string to_string(MoveRate rate) {
  switch (rate) {
    case MoveRate::one: return "1";
    case MoveRate::alpha: return "alpha";
    case MoveRate::beta: return "beta";
  }
  return "?";
}

Rational rate_value(MoveRate rate, const RatePoint& point) {
  switch (rate) {
    case MoveRate::one: return 1;
    case MoveRate::alpha: return point.alpha;
    case MoveRate::beta: return point.beta;
  }
  return 0;
}

WeightRatio TableauMove::observed_ratio() const {
  const Monomial s = source.weight(), t = target.weight();
  return {t.a - s.a, t.b - s.b};
}

WeightRatio predicted_ratio(int case_label, PointKind kind) {
  switch (case_label) {
    case 1:
    case 2:
    case 3: return {0, 0};
    case 4: return {-1, 0};
    case 5: return {0, -1};
    case 6: return {1, 0};
    case 7: return {0, 1};
    case 0:
      if (kind == PointKind::right_leg) return {1, -1};
      if (kind == PointKind::left_leg) return {-1, 1};
      break;
  }
  fail(ErrorCode::invalid_argument, "no weight ratio for case " + std::to_string(case_label) + " at a " + to_string(kind));
}

namespace {

using Rows = std::vector<std::vector<Cell>>;

struct RawTableau {
  Word word;
  Rows rows;
};

Cell swap_symbol(Cell c) {
  if (c == Cell::alpha) return Cell::beta;
  if (c == Cell::beta) return Cell::alpha;
  return c;
}

// Reflection through the anti-diagonal of the path: rows become columns,
// alpha and beta exchange, and the type is reversed with D and E swapped.
RawTableau transpose(const RawTableau& t) {
  const int width = t.word.e_count() + t.word.a_count();
  Rows cols(width);
  for (int j = 0; j < width; ++j) {
    for (const auto& row : t.rows) {
      if (static_cast<int>(row.size()) > j) cols[j].push_back(swap_symbol(row[j]));
    }
  }
  return {t.word.transposed(), std::move(cols)};
}

// A row of the given length ending in beta, placed as low as the shape allows.
void insert_beta_row(Rows& rows, int length) {
  std::vector<Cell> row(std::max(length, 0), Cell::empty);
  if (length > 0) row.back() = Cell::beta;
  std::size_t pos = rows.size();
  if (length > 0) {
    pos = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (static_cast<int>(rows[k].size()) >= length) pos = k + 1;
    }
  }
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
}

Rows beta_row_move(Rows rows, int i) {
  const int length = static_cast<int>(rows[i].size()) - 1;
  rows.erase(rows.begin() + i);
  insert_beta_row(rows, length);
  return rows;
}

Rows right_leg_rows(Rows rows, int width) {
  insert_beta_row(rows, width - 1);
  return rows;
}

bool is_corner(const CondensedTableau& t, int i) {
  const auto& parts = t.shape().parts;
  if (parts[i] == 0) return false;
  if (i + 1 < static_cast<int>(parts.size()) && parts[i + 1] >= parts[i]) return false;
  return t.type_at(i, parts[i] - 1) != BoxType::AA;
}

PointKind corner_kind(BoxType type) {
  switch (type) {
    case BoxType::DE: return PointKind::de_corner;
    case BoxType::DA: return PointKind::da_corner;
    case BoxType::AE: return PointKind::ae_corner;
    case BoxType::AA: break;
  }
  fail(ErrorCode::internal, "AA box is never a corner");
}

int smallest_positive_part(const std::vector<int>& parts) {
  int best = 0;
  for (int p : parts) {
    if (p > 0) best = p;
  }
  return best;
}

}  // namespace

std::vector<TransitionPoint> transition_points(const CondensedTableau& t) {
  std::vector<TransitionPoint> out;
  const auto& parts = t.shape().parts;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    if (is_corner(t, i)) out.push_back({corner_kind(t.type_at(i, parts[i] - 1)), i, parts[i] - 1});
  }
  if (t.word().starts_with(Letter::E)) out.push_back({PointKind::right_leg, -1, -1});
  if (t.word().ends_with(Letter::D)) out.push_back({PointKind::left_leg, -1, -1});
  return out;
}

TransitionPointSummary summarize(const CondensedTableau& t) {
  TransitionPointSummary s;
  const auto& parts = t.shape().parts;
  const int top = parts.empty() ? 0 : parts.front();
  const int bottom = smallest_positive_part(parts);
  for (const auto& p : transition_points(t)) {
    if (p.kind == PointKind::right_leg) {
      s.right_leg = true;
    } else if (p.kind == PointKind::left_leg) {
      s.left_leg = true;
    } else {
      ++s.corners;
      const Cell c = t.at(p.row, p.col);
      if (parts[p.row] == top && c == Cell::beta) s.top_corner_beta = true;
      if (parts[p.row] == bottom && c == Cell::alpha) s.bottom_corner_alpha = true;
    }
  }
  return s;
}

TableauMove apply_transition(const CondensedTableau& t, const TransitionPoint& p) {
  const auto points = transition_points(t);
  if (std::find(points.begin(), points.end(), p) == points.end()) {
    fail(ErrorCode::invalid_argument, "not a transition point of " + t.key());
  }
  const RawTableau raw{t.word(), t.rows()};
  const Word& w = t.word();
  const int m = w.length();
  TableauMove move{t, t, p, MoveRate::one, 0};

  if (p.kind == PointKind::right_leg) {
    const int width = w.e_count() + w.a_count();
    move.target = CondensedTableau(w.with_letter(0, Letter::D), right_leg_rows(raw.rows, width));
    move.rate = MoveRate::alpha;
    move.case_label = width == 1 ? 0 : 6;
    return move;
  }
  if (p.kind == PointKind::left_leg) {
    const Word next = w.with_letter(m - 1, Letter::E);
    const RawTableau tr = transpose(raw);
    const int width = tr.word.e_count() + tr.word.a_count();
    const RawTableau back = transpose({next.transposed(), right_leg_rows(tr.rows, width)});
    move.target = CondensedTableau(back.word, back.rows);
    move.rate = MoveRate::beta;
    move.case_label = width == 1 ? 0 : 7;
    return move;
  }

  const auto& shape = t.shape();
  const int pos = shape.row_positions[p.row];
  const Word next = w.swapped(pos);
  const Cell symbol = t.at(p.row, p.col);
  if (symbol == Cell::beta) {
    move.target = CondensedTableau(next, beta_row_move(raw.rows, p.row));
  } else {
    const RawTableau tr = transpose(raw);
    const RawTableau back = transpose({next.transposed(), beta_row_move(tr.rows, p.col)});
    move.target = CondensedTableau(back.word, back.rows);
  }

  const int row_length = shape.parts[p.row];
  const int column_length = p.row + 1;
  const bool top_most = row_length == shape.parts.front();
  const bool bottom_most = row_length == smallest_positive_part(shape.parts);
  if (symbol == Cell::alpha && top_most) {
    move.case_label = column_length > 1 ? 2 : 4;
  } else if (symbol == Cell::beta && bottom_most) {
    move.case_label = row_length > 1 ? 3 : 5;
  } else {
    move.case_label = 1;
  }
  return move;
}

std::size_t TableauChain::index_of(const CondensedTableau& t) const {
  auto it = std::lower_bound(states.begin(), states.end(), t,
                             [](const CondensedTableau& a, const CondensedTableau& b) { return a.key() < b.key(); });
  if (it == states.end() || !(*it == t)) fail(ErrorCode::invalid_argument, "tableau " + t.key() + " is not in the chain");
  return static_cast<std::size_t>(it - states.begin());
}

TransitionMatrix TableauChain::matrix(const RatePoint& point) const {
  const Rational scale(1, m + 1);
  TransitionMatrix p(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::map<std::size_t, Rational> row;
    Rational out = 0;
    for (std::size_t k = 0; k < moves[i].size(); ++k) {
      if (targets[i][k] == std::numeric_limits<std::size_t>::max()) {
        fail(ErrorCode::internal, "tableau move leaves the sector");
      }
      const Rational prob = rate_value(moves[i][k].rate, point) * scale;
      row[targets[i][k]] += prob;
      out += prob;
    }
    if (out != 1) row[i] += 1 - out;
    for (auto& [j, v] : row) {
      if (v != 0) p[i].emplace_back(j, std::move(v));
    }
  }
  return p;
}

TableauChain build_tableau_chain(int m, int r) {
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  TableauChain chain;
  chain.m = m;
  chain.r = r;
  for (const auto& w : all_words(m, r)) {
    for (auto& t : enumerate_condensed(w)) chain.states.push_back(std::move(t));
  }
  std::sort(chain.states.begin(), chain.states.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < chain.states.size(); ++i) index.emplace(chain.states[i].key(), i);
  chain.moves.resize(chain.states.size());
  chain.targets.resize(chain.states.size());
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    for (const auto& p : transition_points(chain.states[i])) {
      auto mv = apply_transition(chain.states[i], p);
      auto it = index.find(mv.target.key());
      chain.targets[i].push_back(it == index.end() ? std::numeric_limits<std::size_t>::max() : it->second);
      chain.moves[i].push_back(std::move(mv));
    }
  }
  return chain;
}

namespace {

Rational weight_at(const CondensedTableau& t, const RatePoint& pt) {
  const Monomial w = t.weight();
  Rational v = 1;
  for (int i = 0; i < w.a; ++i) v *= pt.alpha;
  for (int i = 0; i < w.b; ++i) v *= pt.beta;
  return v;
}

}  // namespace

BalanceReport verify_detailed_balance(int m, int r, const std::vector<RatePoint>& grid) {
  const auto chain = build_tableau_chain(m, r);
  BalanceReport report;
  report.m = m;
  report.r = r;
  report.tableaux = chain.states.size();
  report.points = grid.size();
  const std::size_t n = chain.states.size();
  for (const auto& pt : grid) {
    std::vector<Rational> inflow(n, 0), outflow(n, 0), expected(n, 0), weights(n);
    for (std::size_t i = 0; i < n; ++i) weights[i] = weight_at(chain.states[i], pt);
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = summarize(chain.states[i]);
      expected[i] = weights[i] * (Rational(s.corners) + (s.right_leg ? pt.alpha : Rational(0)) +
                                  (s.left_leg ? pt.beta : Rational(0)));
      for (std::size_t k = 0; k < chain.moves[i].size(); ++k) {
        const Rational flow = weights[i] * rate_value(chain.moves[i][k].rate, pt);
        outflow[i] += flow;
        const std::size_t j = chain.targets[i][k];
        if (j != std::numeric_limits<std::size_t>::max()) inflow[j] += flow;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (outflow[i] != inflow[i] || outflow[i] != expected[i]) {
        report.failures.push_back({chain.states[i], pt, outflow[i], inflow[i], expected[i]});
      }
    }
  }
  return report;
}

ProjectionReport verify_projection(int m, int r, const std::vector<RatePoint>& grid) {
  const auto chain = build_tableau_chain(m, r);
  ProjectionReport report;
  report.m = m;
  report.r = r;
  report.tableaux = chain.states.size();
  report.points = grid.size();
  auto failure = [&](std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  };
  bool closed = true;
  for (std::size_t i = 0; i < chain.states.size(); ++i) {
    const auto& src = chain.states[i];
    for (std::size_t k = 0; k < chain.moves[i].size(); ++k) {
      const auto& mv = chain.moves[i][k];
      ++report.moves;
      const std::string where = src.key() + " -> " + mv.target.key() + " (" + to_string(mv.point.kind) + ")";
      if (chain.targets[i][k] == std::numeric_limits<std::size_t>::max() || !validate(mv.target).empty()) {
        failure("closure", where);
        closed = false;
      }
      if (mv.observed_ratio() != predicted_ratio(mv.case_label, mv.point.kind)) {
        failure("case", where + " case " + std::to_string(mv.case_label));
      }
    }
    // Condition (ii) and (iii): moves of this tableau against the word moves of its type.
    for (const auto& pt : grid) {
      const auto word_moves = transitions(src.word(), ChainParams{pt.alpha, pt.beta, 0});
      for (const auto& wm : word_moves) {
        std::size_t hits = 0;
        for (const auto& mv : chain.moves[i]) {
          if (mv.target.word() != wm.target) continue;
          ++hits;
          if (rate_value(mv.rate, pt) / (m + 1) != wm.probability) {
            failure("rate", src.key() + " -> " + mv.target.key() + " at (" + to_string(pt.alpha) + "," +
                                to_string(pt.beta) + ")");
          }
        }
        if (hits != 1) {
          failure("uniqueness", src.key() + " has " + std::to_string(hits) + " moves to type " + wm.target.str());
        }
      }
      for (const auto& mv : chain.moves[i]) {
        const bool listed = std::any_of(word_moves.begin(), word_moves.end(),
                                        [&](const WordMove& wm) { return wm.target == mv.target.word(); });
        if (!listed) failure("rate", src.key() + " -> " + mv.target.key() + " has no matching word move");
      }
    }
  }
  if (!closed) return report;

  for (const auto& pt : grid) {
    const auto pi_tab = solve_stationary(chain.matrix(pt));
    const auto word_chain = build_sector_chain(m, r, ChainParams{pt.alpha, pt.beta, 0});
    const auto pi_word = solve_stationary(word_chain.matrix());
    std::vector<Rational> marginal(pi_word.size(), 0);
    for (std::size_t i = 0; i < chain.states.size(); ++i) {
      marginal[word_chain.index_of(chain.states[i].word())] += pi_tab[i];
    }
    for (std::size_t j = 0; j < marginal.size(); ++j) {
      if (marginal[j] != pi_word[j]) {
        failure("marginal", word_chain.states()[j].str() + " at (" + to_string(pt.alpha) + "," + to_string(pt.beta) +
                                "): " + to_string(marginal[j]) + " vs " + to_string(pi_word[j]));
      }
    }
  }
  return report;
}

}  // namespace mcat
