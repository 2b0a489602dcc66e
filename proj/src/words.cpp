#include "pedalwords/words.hpp"

#include <string>
#include <utility>

namespace pedalwords::words {

namespace {

constexpr int kMaxTextAlphabet = 10;  // symbols render as single digits

void check_alphabet(int alphabet_size) {
  if (alphabet_size < 1) {
    throw DomainError("alphabet size must be positive");
  }
}

void check_symbols(const std::vector<Symbol>& symbols, int alphabet_size) {
  for (Symbol s : symbols) {
    if (s >= alphabet_size) {
      throw DomainError("symbol " + std::to_string(int(s)) + " outside alphabet of size " +
                        std::to_string(alphabet_size));
    }
  }
}

// Distinct prime factors by trial division; inputs here are word dimensions.
std::vector<int> distinct_primes(int n) {
  std::vector<int> primes;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

Word1D::Word1D(std::vector<Symbol> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  check_alphabet(alphabet_size_);
  if (symbols_.empty()) {
    throw EmptyWordError("one-dimensional word must be nonempty");
  }
  check_symbols(symbols_, alphabet_size_);
}

Word2D::Word2D(int rows, int cols, int alphabet_size, std::vector<Symbol> cells)
    : rows_(rows), cols_(cols), alphabet_size_(alphabet_size), cells_(std::move(cells)) {
  check_alphabet(alphabet_size_);
  if (rows_ < 1 || cols_ < 1) {
    throw DomainError("two-dimensional word dimensions must be >= 1");
  }
  if (cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw DomainError("cell count does not match declared dimension");
  }
  check_symbols(cells_, alphabet_size_);
}

Word2D row_concat(const Word2D& top, const Word2D& bottom) {
  if (top.cols() != bottom.cols()) {
    throw DimensionError("row concatenation requires equal column counts");
  }
  if (top.alphabet_size() != bottom.alphabet_size()) {
    throw DimensionError("row concatenation requires a common alphabet");
  }
  std::vector<Symbol> cells = top.cells();
  cells.insert(cells.end(), bottom.cells().begin(), bottom.cells().end());
  return Word2D(top.rows() + bottom.rows(), top.cols(), top.alphabet_size(), std::move(cells));
}

Word2D col_concat(const Word2D& left, const Word2D& right) {
  if (left.rows() != right.rows()) {
    throw DimensionError("column concatenation requires equal row counts");
  }
  if (left.alphabet_size() != right.alphabet_size()) {
    throw DimensionError("column concatenation requires a common alphabet");
  }
  const int rows = left.rows();
  const int cols = left.cols() + right.cols();
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < left.cols(); ++j) cells.push_back(left.at(i, j));
    for (int j = 0; j < right.cols(); ++j) cells.push_back(right.at(i, j));
  }
  return Word2D(rows, cols, left.alphabet_size(), std::move(cells));
}

Word2D power_2d(const Word2D& base, int p, int q) {
  if (p < 1 || q < 1) {
    throw DomainError("power exponents must be >= 1");
  }
  const int m = base.rows();
  const int n = base.cols();
  std::vector<Symbol> cells;
  cells.reserve(static_cast<std::size_t>(p) * m * static_cast<std::size_t>(q) * n);
  for (int i = 0; i < p * m; ++i) {
    for (int j = 0; j < q * n; ++j) {
      cells.push_back(base.at(i % m, j % n));
    }
  }
  return Word2D(p * m, q * n, base.alphabet_size(), std::move(cells));
}

// Any period implies a period of prime index, so only lengths n/p for prime
// p | n need checking.
bool is_primitive_1d(const Word1D& w) {
  const int n = w.size();
  for (int p : distinct_primes(n)) {
    const int r = n / p;
    bool periodic = true;
    for (int i = r; i < n && periodic; ++i) {
      periodic = w[i] == w[i % r];
    }
    if (periodic) return false;
  }
  return true;
}

bool is_primitive_2d(const Word2D& w) {
  const int m = w.rows();
  const int n = w.cols();
  for (int p : distinct_primes(m)) {
    const int r = m / p;
    bool periodic = true;
    for (int i = r; i < m && periodic; ++i) {
      for (int j = 0; j < n; ++j) {
        if (w.at(i, j) != w.at(i % r, j)) {
          periodic = false;
          break;
        }
      }
    }
    if (periodic) return false;
  }
  for (int p : distinct_primes(n)) {
    const int c = n / p;
    bool periodic = true;
    for (int i = 0; i < m && periodic; ++i) {
      for (int j = c; j < n; ++j) {
        if (w.at(i, j) != w.at(i, j % c)) {
          periodic = false;
          break;
        }
      }
    }
    if (periodic) return false;
  }
  return true;
}

Word2D parse_word2d(std::string_view text, int alphabet_size) {
  check_alphabet(alphabet_size);
  if (alphabet_size > kMaxTextAlphabet) {
    throw DomainError("textual words support alphabets up to size 10");
  }
  if (text.empty()) {
    throw FormatError("empty word text");
  }
  std::vector<Symbol> cells;
  int rows = 0;
  int cols = -1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view row = text.substr(start, end - start);
    if (row.empty()) {
      throw FormatError("empty row in word text");
    }
    if (cols < 0) {
      cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != cols) {
      throw FormatError("ragged rows in word text");
    }
    for (char ch : row) {
      if (ch < '0' || ch >= '0' + alphabet_size) {
        throw FormatError(std::string("invalid symbol '") + ch + "' in word text");
      }
      cells.push_back(static_cast<Symbol>(ch - '0'));
    }
    ++rows;
    if (end == text.size()) break;
    start = end + 1;
  }
  return Word2D(rows, cols, alphabet_size, std::move(cells));
}

std::string to_text(const Word2D& w) {
  std::string out;
  out.reserve(static_cast<std::size_t>(w.rows()) * (w.cols() + 1));
  for (int i = 0; i < w.rows(); ++i) {
    if (i > 0) out += '\n';
    for (int j = 0; j < w.cols(); ++j) {
      out += static_cast<char>('0' + w.at(i, j));
    }
  }
  return out;
}

}  // namespace pedalwords::words
