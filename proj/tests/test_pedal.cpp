#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "pedalwords/pedal.hpp"
#include "support/oracles.hpp"

using namespace pedalwords;
using namespace pedalwords::pedal;

namespace {

SortedTriple T(int a, int b, int c, int q) {
  return SortedTriple(Rational(a, q), Rational(b, q), Rational(c, q));
}

UnsortedTriple U(int a, int b, int c, int q) {
  return UnsortedTriple(Rational(a, q), Rational(b, q), Rational(c, q));
}

// The four region predicates written out verbatim, for exclusivity checks.
bool in_r0(const SortedTriple& p) { return p.a() < Rational(1, 2); }
bool in_r1(const SortedTriple& p) {
  return p.a() > Rational(1, 2) && 2 * p.a() - 1 >= 2 * p.b();
}
bool in_r2(const SortedTriple& p) {
  return p.a() > Rational(1, 2) && 2 * p.b() > 2 * p.a() - 1 && 2 * p.a() - 1 >= 2 * p.c();
}
bool in_r3(const SortedTriple& p) {
  return p.a() > Rational(1, 2) && 2 * p.c() > 2 * p.a() - 1;
}

}  // namespace

TEST_CASE("triple constructors enforce simplex membership") {
  CHECK_THROWS_AS(SortedTriple(Rational(1, 3), Rational(1, 3), Rational(1, 4)), DomainError);
  CHECK_THROWS_AS(SortedTriple(Rational(1, 4), Rational(1, 2), Rational(1, 4)), DomainError);
  CHECK_THROWS_AS(SortedTriple(Rational(3, 2), Rational(-1, 4), Rational(-1, 4)), DomainError);
  CHECK_NOTHROW(SortedTriple(Rational(1), Rational(0), Rational(0)));  // closure admits boundary
  CHECK_THROWS_AS(SortedTriple::nondegenerate(Rational(1), Rational(0), Rational(0)), DomainError);
  CHECK_THROWS_AS(UnsortedTriple(Rational(1, 2), Rational(1, 2), Rational(1, 2)), DomainError);
  CHECK(U(42, 43, 44, 129).is_interior());
}

TEST_CASE("region classification") {
  CHECK(classify_region(T(44, 43, 42, 129)) == Region::R0);
  CHECK(classify_region(T(75, 43, 11, 129)) == Region::R3);
  CHECK(classify_region(T(86, 22, 21, 129)) == Region::R2);
  CHECK(classify_region(T(8, 1, 1, 10)) == Region::R1);
  CHECK_THROWS_AS(classify_region(T(2, 1, 1, 4)), DegenerateError);
  CHECK_THROWS_AS(classify_region(SortedTriple(Rational(2, 3), Rational(1, 3), Rational(0))),
                  DomainError);
  // Boundary conventions: 2a-1 = 2b lands in R1, 2a-1 = 2c lands in R2.
  CHECK(classify_region(T(7, 2, 1, 10)) == Region::R1);
  CHECK(classify_region(T(6, 3, 1, 10)) == Region::R2);
}

TEST_CASE("pedal step follows the branch formulas") {
  CHECK(pedal_step(T(44, 43, 42, 129)) == T(45, 43, 41, 129));
  CHECK(pedal_step(T(1, 1, 1, 3)) == T(1, 1, 1, 3));
  CHECK(pedal_step(T(86, 22, 21, 129)) == T(44, 43, 42, 129));
  CHECK_THROWS_AS(pedal_step(T(1, 2, 1, 6)), DomainError);  // unsorted rejected at construction
}

TEST_CASE("the heptacycle orbit in sorted form") {
  const int orbit[8][3] = {{44, 43, 42}, {45, 43, 41}, {47, 43, 39}, {51, 43, 35},
                           {59, 43, 27}, {75, 43, 11}, {86, 22, 21}, {44, 43, 42}};
  SortedTriple p = T(orbit[0][0], orbit[0][1], orbit[0][2], 129);
  for (int k = 1; k < 8; ++k) {
    p = pedal_step(p);
    CHECK(p == T(orbit[k][0], orbit[k][1], orbit[k][2], 129));
  }
}

TEST_CASE("unsorted pedal step matches the classical angle formulas") {
  CHECK(pedal_step_unsorted(U(42, 43, 44, 129)) == U(45, 43, 41, 129));
  CHECK(pedal_step_unsorted(U(75, 43, 11, 129)) == U(21, 86, 22, 129));
  CHECK(pedal_step_unsorted(U(1, 1, 1, 3)) == U(1, 1, 1, 3));
  CHECK_THROWS_AS(pedal_step_unsorted(U(2, 1, 1, 4)), DegenerateError);
  CHECK_THROWS_AS(pedal_step_unsorted(UnsortedTriple(Rational(1), Rational(0), Rational(0))),
                  DomainError);
}

TEST_CASE("inverse branches evaluate as listed") {
  const Vec3 equilateral = {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  CHECK(inverse_branch(Region::R1).apply(equilateral) ==
        Vec3{Rational(2, 3), Rational(1, 6), Rational(1, 6)});
  CHECK(inverse_branch(Region::R0).apply(equilateral) == equilateral);
  const Vec3 period1 = {Rational(4, 7), Rational(2, 7), Rational(1, 7)};
  CHECK(inverse_branch(Region::R3).apply(period1) == period1);
}

TEST_CASE("composition is exact and ordered") {
  const AffineMap3 i0 = inverse_branch(Region::R0);
  const AffineMap3 i3 = inverse_branch(Region::R3);
  CHECK(compose(AffineMap3::identity(), i0) == i0);
  CHECK(compose(i0, AffineMap3::identity()) == i0);

  const Vec3 corner = {Rational(1), Rational(0), Rational(0)};
  CHECK(i0.apply(corner) == Vec3{Rational(1, 2), Rational(1, 2), Rational(0)});
  CHECK(compose(i0, i0).apply(corner) == Vec3{Rational(1, 2), Rational(1, 4), Rational(1, 4)});

  // compose(outer, inner) applies inner first.
  const Vec3 generic = {Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  CHECK(compose(i0, i3).apply(generic) == i0.apply(i3.apply(generic)));
  CHECK(compose(i0, i3).apply(generic) == Vec3{Rational(5, 12), Rational(3, 8), Rational(5, 24)});
  CHECK(compose(i3, i0).apply(generic) == Vec3{Rational(5, 8), Rational(5, 24), Rational(1, 6)});
  CHECK(compose(i0, i3) != compose(i3, i0));
}

TEST_CASE("branch compositions contract squared distances by exactly 4^-n") {
  const Vec3 p = {Rational(1), Rational(0), Rational(0)};
  const Vec3 q = {Rational(0), Rational(0), Rational(1)};
  const Rational base = testing::squared_distance(p, q);
  const Region word[] = {Region::R0, Region::R3, Region::R2, Region::R1, Region::R0};
  AffineMap3 map = inverse_branch(word[0]);
  Rational factor(1, 4);
  for (int n = 1; n <= 5; ++n) {
    CHECK(testing::squared_distance(map.apply(p), map.apply(q)) == factor * base);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        CHECK(abs(map.matrix(r, c)) <= Rational(1, 2));
      }
    }
    if (n < 5) {
      map = compose(inverse_branch(word[n]), map);
      factor /= 4;
    }
  }
}

TEST_CASE("fixed points of single branches") {
  CHECK(fixed_point(inverse_branch(Region::R0)) == T(1, 1, 1, 3));
  CHECK(fixed_point(inverse_branch(Region::R3)) == T(4, 2, 1, 7));
  CHECK_THROWS_AS(fixed_point(AffineMap3::identity()), ContractionViolation);
}

TEST_CASE("fixed point of the heptacycle composition") {
  const Region word[] = {Region::R0, Region::R0, Region::R0, Region::R0,
                         Region::R0, Region::R3, Region::R2};
  AffineMap3 map = inverse_branch(word[6]);
  for (int i = 5; i >= 0; --i) {
    map = compose(inverse_branch(word[i]), map);
  }
  const SortedTriple p = fixed_point(map);
  CHECK(p == T(44, 43, 42, 129));
  CHECK(map.apply(p.vec()) == p.vec());
}

TEST_CASE("exact pedal period") {
  CHECK(exact_pedal_period(T(44, 43, 42, 129), 10) == PeriodResult::period(7));
  CHECK(exact_pedal_period(T(3, 1, 1, 5), 10) == PeriodResult::period(2));
  CHECK(exact_pedal_period(T(3, 2, 1, 6), 10) == PeriodResult::degenerate(0));
  CHECK(exact_pedal_period(T(44, 43, 42, 129), 6) == PeriodResult::not_within_bound());
  // (5/8, 2/8, 1/8) steps onto the right triangle (1/2, 1/4, 1/4).
  CHECK(exact_pedal_period(T(5, 2, 1, 8), 10) == PeriodResult::degenerate(1));
  // (2/3, 1/6, 1/6) maps onto the equilateral cycle without belonging to it.
  CHECK(exact_pedal_period(T(4, 1, 1, 6), 100) == PeriodResult::not_within_bound());
  CHECK_THROWS_AS(exact_pedal_period(T(44, 43, 42, 129), 0), DomainError);
}

TEST_CASE("partition: exactly one region predicate holds on C*") {
  const auto samples = testing::sample_cstar_triples(64);
  REQUIRE(samples.size() >= 1000);
  for (const SortedTriple& p : samples) {
    const int hits = int(in_r0(p)) + int(in_r1(p)) + int(in_r2(p)) + int(in_r3(p));
    REQUIRE(hits == 1);
    CHECK(in_r0(p) == (classify_region(p) == Region::R0));
    CHECK(in_r1(p) == (classify_region(p) == Region::R1));
    CHECK(in_r2(p) == (classify_region(p) == Region::R2));
    CHECK(in_r3(p) == (classify_region(p) == Region::R3));
  }
}

TEST_CASE("inverse branch undoes the pedal step exactly") {
  for (const SortedTriple& p : testing::sample_cstar_triples(48)) {
    const Region r = classify_region(p);
    const SortedTriple image = pedal_step(p);
    CHECK(inverse_branch(r).apply(image.vec()) == p.vec());
  }
}

TEST_CASE("inverse branches map the closed sorted simplex into itself") {
  for (int q = 1; q <= 24; ++q) {
    for (int a = 0; a <= q; ++a) {
      for (int b = 0; b <= a; ++b) {
        const int c = q - a - b;
        if (c < 0 || c > b) continue;
        const Vec3 p = {Rational(a, q), Rational(b, q), Rational(c, q)};
        for (int i = 0; i < 4; ++i) {
          const Vec3 image = inverse_branch(region_from_index(i)).apply(p);
          CHECK(image[0] >= image[1]);
          CHECK(image[1] >= image[2]);
          CHECK(image[2] >= 0);
          CHECK(image[0] + image[1] + image[2] == 1);
        }
      }
    }
  }
}

TEST_CASE("each inverse branch halves distances exactly") {
  const auto samples = testing::sample_cstar_triples(40);
  REQUIRE(samples.size() >= 1000);
  for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
    const Vec3& p = samples[i].vec();
    const Vec3& q = samples[i + 1].vec();
    const Rational base = testing::squared_distance(p, q);
    for (int r = 0; r < 4; ++r) {
      const AffineMap3 branch = inverse_branch(region_from_index(r));
      CHECK(4 * testing::squared_distance(branch.apply(p), branch.apply(q)) == base);
    }
  }
}

TEST_CASE("sorted and unsorted steps agree after sorting") {
  int checked = 0;
  for (const SortedTriple& p : testing::sample_cstar_triples(40)) {
    if (p.a() == p.b() || p.b() == p.c()) continue;
    // Feed the coordinates in a scrambled order.
    const UnsortedTriple t(p.c(), p.a(), p.b());
    CHECK(sort_triple(pedal_step_unsorted(t)) == pedal_step(p));
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("orbits over a fixed odd denominator are eventually periodic") {
  for (int q : {7, 9, 11, 13, 15}) {
    for (const SortedTriple& start : testing::sorted_triples_with_denominator(q, false)) {
      // Independent orbit analysis: walk until a state repeats or degenerates,
      // recording first-visit indices.
      std::map<SortedTriple, int> first_seen;
      std::vector<SortedTriple> orbit = {start};
      first_seen[start] = 0;
      int verdict_period = -1;
      bool degenerate = false;
      bool preperiodic = false;
      while (true) {
        const SortedTriple& cur = orbit.back();
        CHECK(denominator(cur.a()) <= q);
        CHECK(q % denominator(cur.a()).convert_to<int>() == 0);
        if (cur.a() == Rational(1, 2)) {
          degenerate = true;
          break;
        }
        SortedTriple next = pedal_step(cur);
        auto [it, inserted] = first_seen.try_emplace(next, static_cast<int>(orbit.size()));
        if (!inserted) {
          if (it->second == 0) {
            verdict_period = static_cast<int>(orbit.size());
          } else {
            preperiodic = true;
          }
          break;
        }
        orbit.push_back(std::move(next));
      }
      const int bound = q * q * q;
      const PeriodResult result = exact_pedal_period(start, bound);
      if (degenerate) {
        CHECK(result.kind == PeriodResult::Kind::Degenerate);
      } else if (verdict_period > 0) {
        CHECK(result == PeriodResult::period(verdict_period));
      } else {
        CHECK(preperiodic);
        CHECK(result == PeriodResult::not_within_bound());
      }
    }
  }
}

TEST_CASE("triple parsing and formatting") {
  const SortedTriple hepta = parse_sorted_triple("44/129,43/129,42/129");
  CHECK(hepta == T(44, 43, 42, 129));
  CHECK(format_triple(hepta) == "44/129,1/3,14/43");  // reduced fractions
  CHECK(parse_sorted_triple("42/129,43/129,44/129") == hepta);  // parser sorts
  CHECK(parse_sorted_triple("1,0,0") == SortedTriple(Rational(1), Rational(0), Rational(0)));
  CHECK(format_triple(T(1, 1, 1, 3)) == "1/3,1/3,1/3");
  CHECK(format_triple(U(42, 43, 44, 129)) == "14/43,1/3,44/129");

  CHECK_THROWS_AS(parse_sorted_triple("1/2,1/4"), FormatError);
  CHECK_THROWS_AS(parse_sorted_triple("1/2,1/4,1/4,0"), FormatError);
  CHECK_THROWS_AS(parse_sorted_triple("a,b,c"), FormatError);
  CHECK_THROWS_AS(parse_sorted_triple("1/0,1/2,1/2"), FormatError);
  CHECK_THROWS_AS(parse_sorted_triple("1/2,1/4,1/5"), DomainError);   // sum != 1
  CHECK_THROWS_AS(parse_sorted_triple("3/2,-1/4,-1/4"), DomainError); // negative
}
