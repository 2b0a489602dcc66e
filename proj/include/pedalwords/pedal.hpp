#pragma once

#include <array>
#include <string>
#include <string_view>

#include "pedalwords/errors.hpp"
#include "pedalwords/rational.hpp"

namespace pedalwords::pedal {

using Vec3 = std::array<Rational, 3>;

// Branch labels of the sorted pedal map; biject with the coding alphabet
// {0,1,2,3} via R_i <-> i.
enum class Region : int { R0 = 0, R1 = 1, R2 = 2, R3 = 3 };

int region_index(Region r);
Region region_from_index(int i);  // DomainError outside 0..3

// Normalized angle triple in any order: a, b, c >= 0 and a + b + c = 1.
class UnsortedTriple {
 public:
  UnsortedTriple(Rational a, Rational b, Rational c);

  const Rational& a() const { return v_[0]; }
  const Rational& b() const { return v_[1]; }
  const Rational& c() const { return v_[2]; }
  const Vec3& vec() const { return v_; }
  bool is_interior() const;  // all coordinates > 0

  bool operator==(const UnsortedTriple&) const = default;

 private:
  Vec3 v_;
};

// Similarity class of a triangle: a >= b >= c >= 0 and a + b + c = 1. The
// plain constructor admits the closure; nondegenerate() additionally requires
// c > 0 (a genuine triangle).
class SortedTriple {
 public:
  SortedTriple(Rational a, Rational b, Rational c);
  static SortedTriple nondegenerate(Rational a, Rational b, Rational c);

  const Rational& a() const { return v_[0]; }
  const Rational& b() const { return v_[1]; }
  const Rational& c() const { return v_[2]; }
  const Vec3& vec() const { return v_; }
  bool is_nondegenerate() const;  // c > 0

  bool operator==(const SortedTriple&) const = default;
  // Lexicographic; gives orbit sets a deterministic order.
  bool operator<(const SortedTriple& other) const;

 private:
  Vec3 v_;
};

// Descending-sorted copy of t.
SortedTriple sort_triple(const UnsortedTriple& t);

// The unique region containing p, with the boundary conventions: 2a-1 = 2b
// belongs to R1 and 2a-1 = 2c belongs to R2. Requires c > 0 (DomainError) and
// a != 1/2 (DegenerateError: right triangles have no pedal step).
Region classify_region(const SortedTriple& p);

// One application of the sorted pedal map:
//   R0 -> (1-2c, 1-2b, 1-2a)   R1 -> (2a-1, 2b, 2c)
//   R2 -> (2b, 2a-1, 2c)       R3 -> (2b, 2c, 2a-1)
// The image is verified (not re-sorted) to be descending; a violation raises
// PostconditionError since the map's definition guarantees sortedness.
SortedTriple pedal_step(const SortedTriple& p);

// One pedal step on an unsorted interior triple: acute (all < 1/2) maps to
// (1-2a, 1-2b, 1-2c); obtuse at position i doubles everything and subtracts 1
// at i. DegenerateError when some coordinate equals 1/2.
UnsortedTriple pedal_step_unsorted(const UnsortedTriple& t);

// Exact affine self-map p -> matrix * p + offset of rational 3-space.
class AffineMap3 {
 public:
  AffineMap3(std::array<Vec3, 3> matrix_rows, Vec3 offset);
  static AffineMap3 identity();

  Vec3 apply(const Vec3& p) const;

  const Rational& matrix(int row, int col) const {
    return matrix_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  const Rational& offset(int i) const { return offset_[static_cast<std::size_t>(i)]; }

  bool operator==(const AffineMap3&) const = default;

 private:
  std::array<Vec3, 3> matrix_;
  Vec3 offset_;
};

// The contracting right inverse of branch i:
//   I0(a,b,c) = ((1-c)/2, (1-b)/2, (1-a)/2)   I1(a,b,c) = ((a+1)/2, b/2, c/2)
//   I2(a,b,c) = ((b+1)/2, a/2, c/2)           I3(a,b,c) = ((c+1)/2, a/2, b/2)
AffineMap3 inverse_branch(Region i);

// (outer . inner)(p) = outer(inner(p)) for all p, exactly.
AffineMap3 compose(const AffineMap3& outer, const AffineMap3& inner);

// Unique fixed point of a composition of >= 1 inverse branches, by exact
// Gaussian elimination on (Id - matrix) p = offset with partial pivoting on
// nonzero rational pivots. A singular system raises ContractionViolation
// (impossible for genuine branch compositions); a solution outside the sorted
// simplex raises PostconditionError.
SortedTriple fixed_point(const AffineMap3& f);

// Outcome of iterating the sorted pedal map from a starting triple.
struct PeriodResult {
  enum class Kind { Period, Degenerate, NotWithinBound };

  Kind kind;
  // The exact period for Kind::Period; the index of the right-angled iterate
  // for Kind::Degenerate; unused (-1) otherwise.
  int steps;

  static PeriodResult period(int n) { return {Kind::Period, n}; }
  static PeriodResult degenerate(int step) { return {Kind::Degenerate, step}; }
  static PeriodResult not_within_bound() { return {Kind::NotWithinBound, -1}; }

  bool operator==(const PeriodResult&) const = default;
};

// Least n <= max_n with P^n(p) = p, if any. Degeneracy (a = 1/2) is reported
// for the iterate at which the next step would be undefined. Revisiting any
// earlier non-start iterate proves the orbit entered a cycle that excludes p,
// so NotWithinBound is returned without exhausting the bound.
PeriodResult exact_pedal_period(const SortedTriple& p, int max_n);

// "a,b,c" with each coordinate "n" or "n/d". Fractions are reduced and the
// coordinates sorted descending before validating membership in the sorted
// simplex (FormatError for unparseable text, DomainError for a triple outside
// the simplex).
SortedTriple parse_sorted_triple(std::string_view text);

// Comma-separated reduced fractions; whole coordinates print without a slash.
std::string format_triple(const SortedTriple& p);
std::string format_triple(const UnsortedTriple& t);

}  // namespace pedalwords::pedal
