#include "pedalwords/bijection.hpp"

#include <algorithm>
#include <utility>

namespace pedalwords::bijection {

namespace {

constexpr int kGammaSize = 4;

void require_length(int n) {
  if (n < 1) {
    throw DomainError("word length must be >= 1");
  }
}

}  // namespace

ColumnWord::ColumnWord(std::vector<words::Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw EmptyWordError("column word must be nonempty");
  }
  for (words::Symbol s : symbols_) {
    if (s >= kGammaSize) {
      throw DomainError("column word symbol outside {0,1,2,3}");
    }
  }
}

ColumnWord ColumnWord::parse(std::string_view text) {
  std::vector<words::Symbol> symbols;
  symbols.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '3') {
      throw FormatError(std::string("invalid itinerary symbol '") + ch + "'");
    }
    symbols.push_back(static_cast<words::Symbol>(ch - '0'));
  }
  if (symbols.empty()) {
    throw FormatError("empty itinerary");
  }
  return ColumnWord(std::move(symbols));
}

words::Word1D ColumnWord::to_word1d() const { return words::Word1D(symbols_, kGammaSize); }

std::string ColumnWord::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (words::Symbol s : symbols_) {
    out += static_cast<char>('0' + s);
  }
  return out;
}

bool ColumnWord::operator<(const ColumnWord& other) const {
  return std::lexicographical_compare(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                                      other.symbols_.end());
}

words::Word2D eta(const ColumnWord& w) {
  const int n = w.size();
  std::vector<words::Symbol> cells(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    const words::Symbol s = w[j];
    // Top row is the high bit of the symbol; bottom row is the complemented
    // low bit: 0 -> (0,1), 1 -> (0,0), 2 -> (1,1), 3 -> (1,0).
    cells[static_cast<std::size_t>(j)] = static_cast<words::Symbol>(s >> 1);
    cells[static_cast<std::size_t>(n + j)] = static_cast<words::Symbol>(1 - (s & 1));
  }
  return words::Word2D(2, n, 2, std::move(cells));
}

ColumnWord eta_inv(const words::Word2D& w) {
  if (w.rows() != 2) {
    throw FormatError("eta inverse requires exactly two rows");
  }
  if (w.alphabet_size() != 2) {
    throw FormatError("eta inverse requires a binary word");
  }
  std::vector<words::Symbol> symbols(static_cast<std::size_t>(w.cols()));
  for (int j = 0; j < w.cols(); ++j) {
    symbols[static_cast<std::size_t>(j)] =
        static_cast<words::Symbol>(2 * w.at(0, j) + (1 - w.at(1, j)));
  }
  return ColumnWord(std::move(symbols));
}

bool is_column_word_admissible(const ColumnWord& w) {
  bool outside_12 = false;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] != 1 && w[i] != 2) {
      outside_12 = true;
      break;
    }
  }
  return outside_12 && words::is_primitive_1d(w.to_word1d());
}

ColumnWord itinerary(const pedal::SortedTriple& p, int n) {
  require_length(n);
  std::vector<words::Symbol> symbols;
  symbols.reserve(static_cast<std::size_t>(n));
  pedal::SortedTriple current = p;
  for (int j = 0; j < n; ++j) {
    symbols.push_back(static_cast<words::Symbol>(pedal::region_index(pedal::classify_region(current))));
    current = pedal::pedal_step(current);
  }
  if (!(current == p)) {
    throw NotPeriodicError("triple does not return to itself after " + std::to_string(n) +
                           " pedal steps");
  }
  return ColumnWord(std::move(symbols));
}

words::Word2D triangle_to_word(const pedal::SortedTriple& p, int n) {
  return eta(itinerary(p, n));
}

pedal::AffineMap3 branch_composition(const ColumnWord& w) {
  pedal::AffineMap3 map = pedal::inverse_branch(pedal::region_from_index(w[w.size() - 1]));
  for (int i = w.size() - 2; i >= 0; --i) {
    map = pedal::compose(pedal::inverse_branch(pedal::region_from_index(w[i])), map);
  }
  return map;
}

PeriodicTriangle word_to_triangle(const words::Word2D& w) {
  if (!words::is_primitive_2d(w)) {
    throw NotInDomainError("word is not primitive");
  }
  const ColumnWord code = eta_inv(w);
  if (!is_column_word_admissible(code)) {
    throw NotInDomainError("column word is not admissible");
  }
  const int n = code.size();
  const pedal::SortedTriple triple = pedal::fixed_point(branch_composition(code));
  if (!triple.is_nondegenerate()) {
    throw BijectionViolation("fixed point is a degenerate triple");
  }
  if (!(pedal::exact_pedal_period(triple, n) == pedal::PeriodResult::period(n))) {
    throw BijectionViolation("fixed point does not have exact pedal period " + std::to_string(n));
  }
  if (!(itinerary(triple, n) == code)) {
    throw BijectionViolation("fixed point's itinerary does not reproduce the word");
  }
  return PeriodicTriangle{triple, n, code};
}

void for_each_admissible_word(int n, const std::function<void(const ColumnWord&)>& fn) {
  require_length(n);
  // Odometer over Gamma^n in lexicographic order.
  std::vector<words::Symbol> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    ColumnWord w(digits);
    if (is_column_word_admissible(w)) {
      fn(w);
    }
    int pos = n - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == kGammaSize - 1) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++digits[static_cast<std::size_t>(pos)];
  }
}

std::vector<ColumnWord> enumerate_admissible_words(int n) {
  std::vector<ColumnWord> out;
  for_each_admissible_word(n, [&](const ColumnWord& w) { out.push_back(w); });
  return out;
}

void for_each_periodic_triangle(int n, const std::function<void(const PeriodicTriangle&)>& fn) {
  for_each_admissible_word(n, [&](const ColumnWord& w) { fn(word_to_triangle(eta(w))); });
}

std::vector<PeriodicTriangle> enumerate_periodic_triangles(int n) {
  std::vector<PeriodicTriangle> out;
  for_each_periodic_triangle(n, [&](const PeriodicTriangle& t) { out.push_back(t); });
  return out;
}

}  // namespace pedalwords::bijection
