#include "mcat/tableaux.hpp"

#include <algorithm>

#include "mcat/error.hpp"

namespace mcat {

char to_char(Cell cell) {
  switch (cell) {
    case Cell::empty: return '.';
    case Cell::alpha: return 'a';
    case Cell::beta: return 'b';
    case Cell::x: return 'x';
  }
  return '?';
}

BoxType box_type(Letter row, Letter col) {
  if (row == Letter::E || col == Letter::D) fail(ErrorCode::invalid_argument, "no box between these letters");
  if (row == Letter::D) return col == Letter::E ? BoxType::DE : BoxType::DA;
  return col == Letter::E ? BoxType::AE : BoxType::AA;
}

CondensedTableau::CondensedTableau(Word word, std::vector<std::vector<Cell>> rows)
    : word_(std::move(word)), shape_(shape_of(word_)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows()) {
    fail(ErrorCode::invalid_argument, "filling has " + std::to_string(rows_.size()) + " rows, shape has " +
                                          std::to_string(shape_.rows()));
  }
  for (int i = 0; i < shape_.rows(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.parts[i]) {
      fail(ErrorCode::invalid_argument, "row " + std::to_string(i) + " of the filling has the wrong length");
    }
  }
}

BoxType CondensedTableau::type_at(int row, int col) const {
  return box_type(shape_.row_labels.at(row), shape_.col_labels.at(col));
}

Monomial CondensedTableau::interior_weight() const {
  Monomial w;
  for (const auto& row : rows_) {
    for (Cell c : row) {
      if (c == Cell::alpha) ++w.a;
      if (c == Cell::beta) ++w.b;
    }
  }
  return w;
}

Monomial CondensedTableau::weight() const {
  return interior_weight() * Monomial{word_.d_count(), word_.e_count()};
}

std::string CondensedTableau::key() const {
  std::string k = word_.str() + ":";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) k += '|';
    for (Cell c : rows_[i]) k += to_char(c);
  }
  return k;
}

namespace {

bool beta_right_of(const std::vector<std::vector<Cell>>& rows, int i, int j) {
  const auto& row = rows[i];
  for (std::size_t jj = j + 1; jj < row.size(); ++jj) {
    if (row[jj] == Cell::beta) return true;
  }
  return false;
}

bool alpha_below(const std::vector<std::vector<Cell>>& rows, int i, int j) {
  for (std::size_t ii = i + 1; ii < rows.size(); ++ii) {
    if (static_cast<int>(rows[ii].size()) <= j) break;
    if (rows[ii][j] == Cell::alpha) return true;
  }
  return false;
}

}  // namespace

std::vector<Violation> validate(const CondensedTableau& t) {
  std::vector<Violation> out;
  const auto& rows = t.rows();
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) {
      const Cell c = rows[i][j];
      const BoxType type = t.type_at(i, j);
      auto report = [&](int rule, const std::string& msg) { out.push_back({i, j, rule, msg}); };
      if (c == Cell::x) {
        report(0, "x is not a condensed symbol");
        continue;
      }
      if (beta_right_of(rows, i, j)) {
        if (c != Cell::empty) report(1, "box left of a beta must be empty");
        continue;
      }
      if (alpha_below(rows, i, j)) {
        if (c != Cell::empty) report(2, "box above an alpha must be empty");
        continue;
      }
      switch (type) {
        case BoxType::DE:
          if (c == Cell::empty) report(3, "unforced DE box must hold alpha or beta");
          break;
        case BoxType::DA:
          if (c != Cell::beta) report(4, "unforced DA box must hold beta");
          break;
        case BoxType::AE:
          if (c != Cell::alpha) report(5, "unforced AE box must hold alpha");
          break;
        case BoxType::AA:
          if (c != Cell::empty) report(6, "AA box must be empty");
          break;
      }
    }
  }
  return out;
}

namespace {

struct CondensedSearch {
  const Word& word;
  const Shape& shape;
  std::vector<std::pair<int, int>> order;  // bottom row to top, right to left
  std::vector<std::vector<Cell>> rows;
  std::vector<CondensedTableau> out;

  void run(std::size_t k) {
    if (k == order.size()) {
      out.emplace_back(word, rows);
      return;
    }
    const auto [i, j] = order[k];
    Cell& cell = rows[i][j];
    if (beta_right_of(rows, i, j) || alpha_below(rows, i, j)) {
      cell = Cell::empty;
      run(k + 1);
      return;
    }
    switch (box_type(shape.row_labels[i], shape.col_labels[j])) {
      case BoxType::DE:
        cell = Cell::alpha;
        run(k + 1);
        cell = Cell::beta;
        run(k + 1);
        break;
      case BoxType::DA: cell = Cell::beta; run(k + 1); break;
      case BoxType::AE: cell = Cell::alpha; run(k + 1); break;
      case BoxType::AA: cell = Cell::empty; run(k + 1); break;
    }
    cell = Cell::empty;
  }
};

}  // namespace

std::vector<CondensedTableau> enumerate_condensed(const Word& word) {
  const Shape shape = shape_of(word);
  CondensedSearch search{word, shape, {}, {}, {}};
  for (int i = shape.rows() - 1; i >= 0; --i) {
    for (int j = shape.parts[i] - 1; j >= 0; --j) search.order.emplace_back(i, j);
  }
  for (int len : shape.parts) search.rows.emplace_back(len, Cell::empty);
  search.run(0);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

WeightPoly word_weight(const Word& word) {
  WeightPoly total;
  for (const auto& t : enumerate_condensed(word)) {
    const Monomial w = t.weight();
    total.add_term({w.a, w.b, 0}, 1);
  }
  return total;
}

std::string render_ascii(const CondensedTableau& t) {
  const Shape& s = t.shape();
  std::string out = "   ";
  for (Letter l : s.col_labels) {
    out += ' ';
    out += to_char(l);
  }
  out += '\n';
  for (int i = 0; i < s.rows(); ++i) {
    out += to_char(s.row_labels[i]);
    out += " |";
    for (Cell c : t.rows()[i]) {
      out += ' ';
      out += to_char(c);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mcat
