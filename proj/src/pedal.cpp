#include "pedalwords/pedal.hpp"

#include <set>
#include <utility>
#include <vector>

namespace pedalwords::pedal {

namespace {

const Rational kHalf = Rational(1, 2);

Rational vec_sum(const Vec3& v) { return v[0] + v[1] + v[2]; }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

int region_index(Region r) { return static_cast<int>(r); }

Region region_from_index(int i) {
  if (i < 0 || i > 3) {
    throw DomainError("region index must be in 0..3");
  }
  return static_cast<Region>(i);
}

UnsortedTriple::UnsortedTriple(Rational a, Rational b, Rational c)
    : v_{std::move(a), std::move(b), std::move(c)} {
  if (v_[0] < 0 || v_[1] < 0 || v_[2] < 0) {
    throw DomainError("angle triple has a negative coordinate");
  }
  if (vec_sum(v_) != 1) {
    throw DomainError("angle triple must sum to 1");
  }
}

bool UnsortedTriple::is_interior() const { return v_[0] > 0 && v_[1] > 0 && v_[2] > 0; }

SortedTriple::SortedTriple(Rational a, Rational b, Rational c)
    : v_{std::move(a), std::move(b), std::move(c)} {
  if (v_[2] < 0) {
    throw DomainError("sorted triple has a negative coordinate");
  }
  if (v_[0] < v_[1] || v_[1] < v_[2]) {
    throw DomainError("triple is not sorted descending");
  }
  if (vec_sum(v_) != 1) {
    throw DomainError("sorted triple must sum to 1");
  }
}

SortedTriple SortedTriple::nondegenerate(Rational a, Rational b, Rational c) {
  SortedTriple p(std::move(a), std::move(b), std::move(c));
  if (!p.is_nondegenerate()) {
    throw DomainError("triple has a zero angle");
  }
  return p;
}

bool SortedTriple::is_nondegenerate() const { return v_[2] > 0; }

bool SortedTriple::operator<(const SortedTriple& other) const {
  if (v_[0] != other.v_[0]) return v_[0] < other.v_[0];
  if (v_[1] != other.v_[1]) return v_[1] < other.v_[1];
  return v_[2] < other.v_[2];
}

SortedTriple sort_triple(const UnsortedTriple& t) {
  Vec3 v = t.vec();
  if (v[0] < v[1]) std::swap(v[0], v[1]);
  if (v[1] < v[2]) std::swap(v[1], v[2]);
  if (v[0] < v[1]) std::swap(v[0], v[1]);
  return SortedTriple(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

Region classify_region(const SortedTriple& p) {
  if (!p.is_nondegenerate()) {
    throw DomainError("triple with a zero angle has no pedal step");
  }
  if (p.a() == kHalf) {
    throw DegenerateError("right triangle is pedally degenerate");
  }
  if (p.a() < kHalf) {
    return Region::R0;
  }
  const Rational threshold = 2 * p.a() - 1;
  if (threshold >= 2 * p.b()) return Region::R1;
  if (threshold >= 2 * p.c()) return Region::R2;
  return Region::R3;
}

SortedTriple pedal_step(const SortedTriple& p) {
  const Region r = classify_region(p);
  Vec3 image;
  switch (r) {
    case Region::R0:
      image = {1 - 2 * p.c(), 1 - 2 * p.b(), 1 - 2 * p.a()};
      break;
    case Region::R1:
      image = {2 * p.a() - 1, 2 * p.b(), 2 * p.c()};
      break;
    case Region::R2:
      image = {2 * p.b(), 2 * p.a() - 1, 2 * p.c()};
      break;
    case Region::R3:
      image = {2 * p.b(), 2 * p.c(), 2 * p.a() - 1};
      break;
  }
  if (image[0] < image[1] || image[1] < image[2]) {
    throw PostconditionError("pedal image is not sorted: branch definitions violated");
  }
  return SortedTriple(std::move(image[0]), std::move(image[1]), std::move(image[2]));
}

UnsortedTriple pedal_step_unsorted(const UnsortedTriple& t) {
  if (!t.is_interior()) {
    throw DomainError("unsorted pedal step requires an interior triple");
  }
  const Vec3& v = t.vec();
  int obtuse_at = -1;
  for (int i = 0; i < 3; ++i) {
    if (v[static_cast<std::size_t>(i)] == kHalf) {
      throw DegenerateError("right triangle is pedally degenerate");
    }
    if (v[static_cast<std::size_t>(i)] > kHalf) {
      obtuse_at = i;  // at most one coordinate can exceed 1/2
    }
  }
  if (obtuse_at < 0) {
    return UnsortedTriple(1 - 2 * v[0], 1 - 2 * v[1], 1 - 2 * v[2]);
  }
  Vec3 image = {2 * v[0], 2 * v[1], 2 * v[2]};
  image[static_cast<std::size_t>(obtuse_at)] -= 1;
  return UnsortedTriple(std::move(image[0]), std::move(image[1]), std::move(image[2]));
}

AffineMap3::AffineMap3(std::array<Vec3, 3> matrix_rows, Vec3 offset)
    : matrix_(std::move(matrix_rows)), offset_(std::move(offset)) {}

AffineMap3 AffineMap3::identity() {
  return AffineMap3({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}, Vec3{0, 0, 0});
}

Vec3 AffineMap3::apply(const Vec3& p) const {
  Vec3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = matrix_[i][0] * p[0] + matrix_[i][1] * p[1] + matrix_[i][2] * p[2] + offset_[i];
  }
  return out;
}

AffineMap3 inverse_branch(Region i) {
  const Rational h = kHalf;
  switch (i) {
    case Region::R0:
      return AffineMap3({Vec3{0, 0, -h}, Vec3{0, -h, 0}, Vec3{-h, 0, 0}}, Vec3{h, h, h});
    case Region::R1:
      return AffineMap3({Vec3{h, 0, 0}, Vec3{0, h, 0}, Vec3{0, 0, h}}, Vec3{h, 0, 0});
    case Region::R2:
      return AffineMap3({Vec3{0, h, 0}, Vec3{h, 0, 0}, Vec3{0, 0, h}}, Vec3{h, 0, 0});
    case Region::R3:
      return AffineMap3({Vec3{0, 0, h}, Vec3{h, 0, 0}, Vec3{0, h, 0}}, Vec3{h, 0, 0});
  }
  throw DomainError("invalid region");
}

AffineMap3 compose(const AffineMap3& outer, const AffineMap3& inner) {
  std::array<Vec3, 3> matrix;
  Vec3 offset;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational sum = 0;
      for (int k = 0; k < 3; ++k) {
        sum += outer.matrix(i, k) * inner.matrix(k, j);
      }
      matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(sum);
    }
    Rational off = outer.offset(i);
    for (int k = 0; k < 3; ++k) {
      off += outer.matrix(i, k) * inner.offset(k);
    }
    offset[static_cast<std::size_t>(i)] = std::move(off);
  }
  return AffineMap3(std::move(matrix), std::move(offset));
}

SortedTriple fixed_point(const AffineMap3& f) {
  // Augmented system (Id - A | b), eliminated exactly over the rationals.
  std::array<std::array<Rational, 4>, 3> sys;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      sys[i][j] = Rational(i == j ? 1 : 0) - f.matrix(static_cast<int>(i), static_cast<int>(j));
    }
    sys[i][3] = f.offset(static_cast<int>(i));
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && sys[pivot][col] == 0) ++pivot;
    if (pivot == 3) {
      throw ContractionViolation("Id - matrix is singular: not a branch composition");
    }
    std::swap(sys[col], sys[pivot]);
    const Rational inv = 1 / sys[col][col];
    for (std::size_t j = col; j < 4; ++j) sys[col][j] *= inv;
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || sys[row][col] == 0) continue;
      const Rational factor = sys[row][col];
      for (std::size_t j = col; j < 4; ++j) {
        sys[row][j] -= factor * sys[col][j];
      }
    }
  }
  Vec3 p = {sys[0][3], sys[1][3], sys[2][3]};
  if (f.apply(p) != p) {
    throw PostconditionError("fixed-point solve did not produce a fixed point");
  }
  if (p[0] < p[1] || p[1] < p[2] || p[2] < 0 || vec_sum(p) != 1) {
    throw PostconditionError("fixed point lies outside the sorted simplex");
  }
  return SortedTriple(std::move(p[0]), std::move(p[1]), std::move(p[2]));
}

PeriodResult exact_pedal_period(const SortedTriple& p, int max_n) {
  if (max_n < 1) {
    throw DomainError("max_n must be >= 1");
  }
  if (!p.is_nondegenerate()) {
    throw DomainError("exact pedal period requires a nondegenerate triple");
  }
  std::set<SortedTriple> visited;
  visited.insert(p);
  SortedTriple current = p;
  for (int step = 0; step < max_n; ++step) {
    if (current.a() == kHalf) {
      return PeriodResult::degenerate(step);
    }
    current = pedal_step(current);
    if (current == p) {
      return PeriodResult::period(step + 1);
    }
    if (!visited.insert(current).second) {
      // Entered a cycle that excludes p; the orbit can never return.
      return PeriodResult::not_within_bound();
    }
  }
  return PeriodResult::not_within_bound();
}

SortedTriple parse_sorted_triple(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw FormatError("triple must have exactly three comma-separated coordinates");
  }
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = parse_rational(parts[i]);
  }
  if (v[0] < v[1]) std::swap(v[0], v[1]);
  if (v[1] < v[2]) std::swap(v[1], v[2]);
  if (v[0] < v[1]) std::swap(v[0], v[1]);
  return SortedTriple(std::move(v[0]), std::move(v[1]), std::move(v[2]));
}

std::string format_triple(const SortedTriple& p) {
  return format_rational(p.a()) + "," + format_rational(p.b()) + "," + format_rational(p.c());
}

std::string format_triple(const UnsortedTriple& t) {
  return format_rational(t.a()) + "," + format_rational(t.b()) + "," + format_rational(t.c());
}

}  // namespace pedalwords::pedal
