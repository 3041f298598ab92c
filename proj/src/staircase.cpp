#include <algorithm>

#include "mcat/error.hpp"
#include "mcat/tableaux.hpp"

namespace mcat {

namespace {

Cell diagonal_symbol(Letter l) {
  switch (l) {
    case Letter::D: return Cell::alpha;
    case Letter::E: return Cell::beta;
    case Letter::A: return Cell::x;
  }
  return Cell::empty;
}

// Cells are addressed by letter pair (p, s), p <= s; the cell of row p for
// letter s sits at column m-1-s, and (p, p) is the diagonal.
struct Grid {
  int m;
  std::vector<std::vector<Cell>>& rows;
  Cell get(int p, int s) const { return rows[p][m - 1 - s]; }
  Cell& get(int p, int s) { return rows[p][m - 1 - s]; }
};

Cell seen_right(const Grid& g, const Word& type, int p, int s, StaircaseReading reading) {
  for (int s2 = s - 1; s2 >= p; --s2) {
    const Cell c = g.get(p, s2);
    if (c == Cell::empty) continue;
    if (reading == StaircaseReading::a_lines_transparent && c == Cell::alpha && s2 != p &&
        type[p] == Letter::A) {
      return Cell::x;
    }
    return c;
  }
  return Cell::empty;
}

Cell seen_below(const Grid& g, const Word& type, int p, int s, StaircaseReading reading) {
  for (int p2 = p + 1; p2 <= s; ++p2) {
    const Cell c = g.get(p2, s);
    if (c == Cell::empty) continue;
    if (reading == StaircaseReading::a_lines_transparent && c == Cell::beta && p2 != s &&
        type[s] == Letter::A) {
      return Cell::x;
    }
    return c;
  }
  return Cell::empty;
}

struct Allowed {
  int rule;
  bool empty, alpha, beta;
};

Allowed allowed_for(Cell right, Cell below) {
  if (right == Cell::alpha && below == Cell::beta) return {2, false, true, true};
  if (right == Cell::alpha && below == Cell::x) return {3, false, false, true};
  if (right == Cell::x && below == Cell::beta) return {4, false, true, false};
  return {5, true, false, false};
}

bool permits(const Allowed& a, Cell c) {
  switch (c) {
    case Cell::empty: return a.empty;
    case Cell::alpha: return a.alpha;
    case Cell::beta: return a.beta;
    case Cell::x: return false;
  }
  return false;
}

}  // namespace

StaircaseTableau::StaircaseTableau(Word type, std::vector<std::vector<Cell>> rows)
    : type_(std::move(type)), rows_(std::move(rows)) {
  const int m = type_.length();
  if (static_cast<int>(rows_.size()) != m) fail(ErrorCode::invalid_argument, "staircase needs one row per letter");
  for (int p = 0; p < m; ++p) {
    if (static_cast<int>(rows_[p].size()) != m - p) {
      fail(ErrorCode::invalid_argument, "staircase row " + std::to_string(p) + " has the wrong length");
    }
  }
}

Monomial StaircaseTableau::weight() const {
  Monomial w;
  for (const auto& row : rows_) {
    for (Cell c : row) {
      if (c == Cell::alpha) ++w.a;
      if (c == Cell::beta) ++w.b;
    }
  }
  return w;
}

std::string StaircaseTableau::key() const {
  std::string k = type_.str() + ":";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) k += '|';
    for (Cell c : rows_[i]) k += to_char(c);
  }
  return k;
}

std::vector<Violation> validate(const StaircaseTableau& t, StaircaseReading reading) {
  std::vector<Violation> out;
  const int m = t.size();
  auto rows = t.rows();
  const Grid g{m, rows};
  const Word& type = t.type();
  for (int p = 0; p < m; ++p) {
    const int diag_col = m - 1 - p;
    if (g.get(p, p) != diagonal_symbol(type[p])) {
      out.push_back({p, diag_col, 1, "diagonal box does not match the type letter"});
    }
  }
  for (int p = 0; p < m; ++p) {
    for (int s = p + 1; s < m; ++s) {
      const Allowed a = allowed_for(seen_right(g, type, p, s, reading), seen_below(g, type, p, s, reading));
      if (!permits(a, g.get(p, s))) {
        static const char* const messages[] = {"", "", "box must hold alpha or beta", "box must hold beta",
                                               "box must hold alpha", "box must be empty"};
        out.push_back({p, m - 1 - s, a.rule, messages[a.rule]});
      }
    }
  }
  return out;
}

namespace {

struct StaircaseSearch {
  const Word& type;
  StaircaseReading reading;
  int m;
  std::vector<std::pair<int, int>> order;
  std::vector<std::vector<Cell>> rows;
  std::vector<StaircaseTableau> out;

  void run(std::size_t k) {
    if (k == order.size()) {
      out.emplace_back(type, rows);
      return;
    }
    const auto [p, s] = order[k];
    Grid g{m, rows};
    const Allowed a = allowed_for(seen_right(g, type, p, s, reading), seen_below(g, type, p, s, reading));
    Cell& cell = g.get(p, s);
    for (Cell c : {Cell::empty, Cell::alpha, Cell::beta}) {
      if (!permits(a, c)) continue;
      cell = c;
      run(k + 1);
    }
    cell = Cell::empty;
  }
};

}  // namespace

std::vector<StaircaseTableau> enumerate_staircase(const Word& word, StaircaseReading reading) {
  const int m = word.length();
  StaircaseSearch search{word, reading, m, {}, {}, {}};
  for (int p = 0; p < m; ++p) {
    search.rows.emplace_back(m - p, Cell::empty);
    search.rows[p].back() = diagonal_symbol(word[p]);
  }
  // Rows bottom to top, cells right to left, so that everything a box sees
  // is already decided.
  for (int p = m - 1; p >= 0; --p) {
    for (int s = p + 1; s < m; ++s) search.order.emplace_back(p, s);
  }
  search.run(0);
  std::sort(search.out.begin(), search.out.end(),
            [](const StaircaseTableau& a, const StaircaseTableau& b) { return a.key() < b.key(); });
  return std::move(search.out);
}

CondensedTableau condense(const StaircaseTableau& t) {
  const Word& type = t.type();
  const Shape shape = shape_of(type);
  const int m = t.size();
  std::vector<std::vector<Cell>> rows;
  for (int i = 0; i < shape.rows(); ++i) {
    const int p = shape.row_positions[i];
    std::vector<Cell> row;
    for (int j = 0; j < shape.parts[i]; ++j) {
      const int s = shape.col_positions[j];
      row.push_back(t.at(p, m - 1 - s));
    }
    rows.push_back(std::move(row));
  }
  return CondensedTableau(type, std::move(rows));
}

std::string render_ascii(const StaircaseTableau& t) {
  const int m = t.size();
  std::string out = "   ";
  for (int c = 0; c < m; ++c) {
    out += ' ';
    out += to_char(t.type()[m - 1 - c]);
  }
  out += '\n';
  for (int p = 0; p < m; ++p) {
    out += to_char(t.type()[p]);
    out += " |";
    for (Cell c : t.rows()[p]) {
      out += ' ';
      out += to_char(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mcat
