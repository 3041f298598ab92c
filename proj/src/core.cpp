#include "mcat/core.hpp"

#include <algorithm>
#include <cctype>

#include "mcat/error.hpp"

namespace mcat {

namespace {

int char_rank(Letter l) {
  switch (l) {
    case Letter::A: return 0;
    case Letter::D: return 1;
    case Letter::E: return 2;
  }
  return 0;
}

bool is_row_letter(Letter l) { return l != Letter::E; }
bool is_col_letter(Letter l) { return l != Letter::D; }

}  // namespace

char to_char(Letter letter) {
  switch (letter) {
    case Letter::D: return 'D';
    case Letter::E: return 'E';
    case Letter::A: return 'A';
  }
  return '?';
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) {
    switch (l) {
      case Letter::D: ++d_; break;
      case Letter::E: ++e_; break;
      case Letter::A: ++a_; break;
    }
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty()) throw WordParseError(0, "empty word");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'D': letters.push_back(Letter::D); break;
      case 'E': letters.push_back(Letter::E); break;
      case 'A': letters.push_back(Letter::A); break;
      default:
        throw WordParseError(i, "invalid letter '" + std::string(1, text[i]) + "' at index " +
                                    std::to_string(i) + " (expected D, E or A)");
    }
  }
  return Word(std::move(letters));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(to_char(l));
  return s;
}

Word Word::swapped(std::size_t i) const {
  auto letters = letters_;
  std::swap(letters.at(i), letters.at(i + 1));
  return Word(std::move(letters));
}

Word Word::with_letter(std::size_t i, Letter l) const {
  auto letters = letters_;
  letters.at(i) = l;
  return Word(std::move(letters));
}

Word Word::erased(std::size_t i) const {
  auto letters = letters_;
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
  return Word(std::move(letters));
}

Word Word::splice(std::size_t i, std::size_t j, std::span<const Letter> middle) const {
  std::vector<Letter> letters(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(i));
  letters.insert(letters.end(), middle.begin(), middle.end());
  letters.insert(letters.end(), letters_.begin() + static_cast<std::ptrdiff_t>(j), letters_.end());
  return Word(std::move(letters));
}

Word Word::transposed() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    switch (*it) {
      case Letter::D: letters.push_back(Letter::E); break;
      case Letter::E: letters.push_back(Letter::D); break;
      case Letter::A: letters.push_back(Letter::A); break;
    }
  }
  return Word(std::move(letters));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const auto n = std::min(a.letters_.size(), b.letters_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = char_rank(a.letters_[i]) <=> char_rank(b.letters_[i]); c != 0) return c;
  }
  return a.letters_.size() <=> b.letters_.size();
}

std::vector<int> Shape::conjugate() const {
  std::vector<int> mu(col_labels.size(), 0);
  for (int len : parts) {
    for (int j = 0; j < len; ++j) ++mu[j];
  }
  return mu;
}

int Shape::edge_count() const { return rows() + cols(); }

int Shape::box_count() const {
  int n = 0;
  for (int len : parts) n += len;
  return n;
}

Shape shape_of(const Word& word) {
  Shape s;
  const int m = word.length();
  std::vector<int> ea_positions;
  for (int i = 0; i < m; ++i) {
    if (is_col_letter(word[i])) ea_positions.push_back(i);
  }
  const int width = static_cast<int>(ea_positions.size());
  int ea_seen = 0;
  for (int i = 0; i < m; ++i) {
    const Letter l = word[i];
    // The west edge of an A precedes its south edge.
    if (is_col_letter(l)) ++ea_seen;
    if (is_row_letter(l)) {
      s.parts.push_back(width - ea_seen);
      s.row_labels.push_back(l);
      s.row_positions.push_back(i);
    }
  }
  for (int j = 0; j < width; ++j) {
    const int pos = ea_positions[width - 1 - j];
    s.col_labels.push_back(word[pos]);
    s.col_positions.push_back(pos);
  }
  return s;
}

Word path_word(const Shape& shape) {
  const int width = shape.cols();
  std::vector<Letter> letters;
  int next_col = width - 1;  // next west step walks along the bottom of this column
  bool pending_a = false;
  auto west_step = [&](int col) {
    if (pending_a) fail(ErrorCode::invalid_argument, "A-labelled west edge not followed by an A south edge");
    const Letter l = shape.col_labels.at(col);
    if (l == Letter::A) {
      pending_a = true;
    } else {
      letters.push_back(Letter::E);
    }
  };
  for (int i = 0; i < shape.rows(); ++i) {
    while (next_col >= shape.parts[i]) west_step(next_col--);
    const Letter l = shape.row_labels.at(i);
    if (l == Letter::A) {
      if (!pending_a) fail(ErrorCode::invalid_argument, "A-labelled row is not an inner corner");
      pending_a = false;
      letters.push_back(Letter::A);
    } else {
      if (pending_a) fail(ErrorCode::invalid_argument, "A-labelled west edge not followed by an A south edge");
      letters.push_back(Letter::D);
    }
  }
  while (next_col >= 0) west_step(next_col--);
  if (pending_a) fail(ErrorCode::invalid_argument, "dangling A-labelled west edge");
  return Word(std::move(letters));
}

Word DEDecomposition::reassemble() const {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < subwords.size(); ++i) {
    if (i > 0) letters.push_back(Letter::A);
    auto l = subwords[i].letters();
    letters.insert(letters.end(), l.begin(), l.end());
  }
  return Word(std::move(letters));
}

DEDecomposition de_decompose(const Word& word) {
  DEDecomposition d;
  std::vector<Letter> current;
  for (Letter l : word.letters()) {
    if (l == Letter::A) {
      d.subwords.emplace_back(std::move(current));
      current.clear();
    } else {
      current.push_back(l);
    }
  }
  d.subwords.emplace_back(std::move(current));
  for (const auto& w : d.subwords) d.partitions.push_back(shape_of(w));
  return d;
}

namespace {

void extend_words(int m, int r_left, std::vector<Letter>& prefix, std::vector<Word>& out) {
  const int remaining = m - static_cast<int>(prefix.size());
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Letter l : {Letter::A, Letter::D, Letter::E}) {
    const int r_next = r_left - (l == Letter::A ? 1 : 0);
    if (r_next < 0 || r_next > remaining - 1) continue;
    prefix.push_back(l);
    extend_words(m, r_next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_words(int m, int r) {
  if (m < 0 || r < 0) fail(ErrorCode::invalid_argument, "m and r must be non-negative");
  if (r > m) {
    fail(ErrorCode::invalid_argument,
         "r = " + std::to_string(r) + " exceeds m = " + std::to_string(m));
  }
  std::vector<Word> out;
  std::vector<Letter> prefix;
  extend_words(m, r, prefix, out);
  return out;
}

}  // namespace mcat
