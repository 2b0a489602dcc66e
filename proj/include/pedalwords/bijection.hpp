#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pedalwords/pedal.hpp"
#include "pedalwords/words.hpp"

namespace pedalwords::bijection {

// Word over Gamma = {0,1,2,3}. The same object plays two roles: preimage of a
// two-row binary word under the column substitution, and branch itinerary of
// an orbit of the sorted pedal map.
class ColumnWord {
 public:
  explicit ColumnWord(std::vector<words::Symbol> symbols);  // nonempty, symbols < 4
  static ColumnWord parse(std::string_view text);           // base-4 digit string

  int size() const { return static_cast<int>(symbols_.size()); }
  words::Symbol operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<words::Symbol>& symbols() const { return symbols_; }

  words::Word1D to_word1d() const;  // alphabet size 4
  std::string str() const;

  bool operator==(const ColumnWord&) const = default;
  bool operator<(const ColumnWord& other) const;  // lexicographic

 private:
  std::vector<words::Symbol> symbols_;
};

// A triangle of exact pedal period n together with its coding. The itinerary
// is stored redundantly with the triple so invariants are locally checkable.
struct PeriodicTriangle {
  pedal::SortedTriple triple;
  int period;
  ColumnWord itinerary;
};

// The column substitution, extended symbolwise: the j-th column of the result
// is 0 -> (0,1)^T, 1 -> (0,0)^T, 2 -> (1,1)^T, 3 -> (1,0)^T.
words::Word2D eta(const ColumnWord& w);

// Columnwise inverse of eta; FormatError unless the input is binary with
// exactly two rows.
ColumnWord eta_inv(const words::Word2D& w);

// Membership in the admissible set: primitive and not composed solely of the
// symbols 1 and 2 (either failure makes eta's image non-primitive).
bool is_column_word_admissible(const ColumnWord& w);

// The length-n branch itinerary of p: symbol j records the region of the j-th
// pedal iterate. DegenerateError if the orbit reaches a right triangle;
// NotPeriodicError if the n-th iterate is not p again.
ColumnWord itinerary(const pedal::SortedTriple& p, int n);

// eta applied to the itinerary: the primitive 2 x n binary word of p.
words::Word2D triangle_to_word(const pedal::SortedTriple& p, int n);

// I_w = I_{w_0} . I_{w_1} . ... . I_{w_{n-1}}, composed right to left.
pedal::AffineMap3 branch_composition(const ColumnWord& w);

// Inverse direction: w = eta_inv(W), then the unique fixed point of I_w.
// NotInDomainError if W is not primitive or w is inadmissible. The result is
// fully validated (nondegenerate, exact period n, itinerary equal to w);
// a validation failure raises BijectionViolation and indicates a fault in
// this library, never in the data.
PeriodicTriangle word_to_triangle(const words::Word2D& w);

// Enumeration walks all 4^n candidate words; the CLI refuses larger n without
// an explicit override.
inline constexpr int kDefaultEnumerationBound = 12;

// All admissible words of length n in lexicographic order.
void for_each_admissible_word(int n, const std::function<void(const ColumnWord&)>& fn);
std::vector<ColumnWord> enumerate_admissible_words(int n);

// word_to_triangle(eta(w)) for each admissible w, in lexicographic itinerary
// order; yields every triangle of exact pedal period n exactly once.
void for_each_periodic_triangle(int n, const std::function<void(const PeriodicTriangle&)>& fn);
std::vector<PeriodicTriangle> enumerate_periodic_triangles(int n);

}  // namespace pedalwords::bijection
