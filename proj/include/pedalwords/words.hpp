#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pedalwords/errors.hpp"

namespace pedalwords::words {

using Symbol = std::uint8_t;

// Nonempty word over the alphabet {0, ..., alphabet_size-1}.
class Word1D {
 public:
  Word1D(std::vector<Symbol> symbols, int alphabet_size);

  int size() const { return static_cast<int>(symbols_.size()); }
  int alphabet_size() const { return alphabet_size_; }
  Symbol operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  bool operator==(const Word1D&) const = default;

 private:
  std::vector<Symbol> symbols_;
  int alphabet_size_;
};

// m x n array over {0, ..., alphabet_size-1} with m, n >= 1. Cells are stored
// row-major; W[i,j] is total on the declared dimension by construction.
class Word2D {
 public:
  Word2D(int rows, int cols, int alphabet_size, std::vector<Symbol> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int alphabet_size() const { return alphabet_size_; }
  Symbol at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(j)];
  }
  const std::vector<Symbol>& cells() const { return cells_; }

  bool operator==(const Word2D&) const = default;

 private:
  int rows_;
  int cols_;
  int alphabet_size_;
  std::vector<Symbol> cells_;
};

// Joins top over bottom; column counts and alphabets must match.
Word2D row_concat(const Word2D& top, const Word2D& bottom);

// Joins left before right; row counts and alphabets must match.
Word2D col_concat(const Word2D& left, const Word2D& right);

// The p x q power: dimension pm x qn with result[i,j] = base[i mod m, j mod n].
Word2D power_2d(const Word2D& base, int p, int q);

// False iff w = v^m for a nonempty v and m >= 2. Words of length 1 are
// primitive.
bool is_primitive_1d(const Word1D& w);

// False iff w has a proper row period r | m or column period c | n. A 1 x n
// word behaves exactly like the ordinary word of its single row.
bool is_primitive_2d(const Word2D& w);

// Rows as digit strings joined by '\n', e.g. "0000011\n1111101". Rejects empty
// input, ragged rows, and symbols outside the alphabet.
Word2D parse_word2d(std::string_view text, int alphabet_size = 10);
std::string to_text(const Word2D& w);

}  // namespace pedalwords::words
