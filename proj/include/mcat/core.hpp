#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mcat {

/// D = heavy particle, E = hole, A = light particle.
enum class Letter : std::uint8_t { D, E, A };

char to_char(Letter letter);

/// A state of the two-species exclusion process. The empty word is allowed
/// internally (it is the neutral element of the ansatz recurrences) but
/// parse() rejects empty text.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  /// Case-insensitive; throws WordParseError naming the first bad index.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  bool empty() const { return letters_.empty(); }

  int length() const { return static_cast<int>(letters_.size()); }
  int d_count() const { return d_; }
  int e_count() const { return e_; }
  int a_count() const { return a_; }

  std::string str() const;

  bool starts_with(Letter l) const { return !empty() && letters_.front() == l; }
  bool ends_with(Letter l) const { return !empty() && letters_.back() == l; }

  /// Exchanges positions i and i+1.
  Word swapped(std::size_t i) const;
  Word with_letter(std::size_t i, Letter l) const;
  Word erased(std::size_t i) const;
  /// Concatenation with a word in between: prefix(0..i) + middle + suffix(j..).
  Word splice(std::size_t i, std::size_t j, std::span<const Letter> middle) const;
  /// Reversed with D and E exchanged: the type of the transposed tableau.
  Word transposed() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic in the character order A < D < E.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
  int d_ = 0;
  int e_ = 0;
  int a_ = 0;
};

/// Young diagram of a word, English convention: rows top to bottom (one per
/// D or A, in word order), columns left to right. The rightmost column
/// carries the earliest E-or-A letter. Zero-length rows and columns are kept.
struct Shape {
  std::vector<int> parts;          // lambda_i, weakly decreasing
  std::vector<Letter> row_labels;  // D or A
  std::vector<Letter> col_labels;  // E or A, left to right
  std::vector<int> row_positions;  // word index of each row label
  std::vector<int> col_positions;  // word index of each column label

  int rows() const { return static_cast<int>(parts.size()); }
  int cols() const { return static_cast<int>(col_labels.size()); }
  /// Column lengths mu_j, left to right, zeros included.
  std::vector<int> conjugate() const;
  /// Number of lattice-path edges: every A contributes a west and a south edge.
  int edge_count() const;
  int box_count() const;
};

Shape shape_of(const Word& word);

/// Reads the labelled boundary path of a shape back into a word, with each
/// A west/south inner-corner pair read once. Throws if labels are
/// inconsistent with the path.
Word path_word(const Shape& shape);

struct DEDecomposition {
  std::vector<Word> subwords;   // r+1 maximal A-free factors, possibly empty
  std::vector<Shape> partitions;

  Word reassemble() const;
};

DEDecomposition de_decompose(const Word& word);

/// All words of length m with exactly r A's, in lexicographic order (A < D < E).
std::vector<Word> all_words(int m, int r);

}  // namespace mcat
