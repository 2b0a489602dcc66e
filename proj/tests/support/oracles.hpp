#pragma once

// Test-only oracles: direct definition-based searches kept independent of the
// implementation paths they check.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pedalwords/pedal.hpp"
#include "pedalwords/words.hpp"

namespace pedalwords::testing {

// Primitivity by exhaustive decomposition: w = v^m for some proper divisor
// length, checked against every candidate prefix.
inline bool brute_force_primitive_1d(const words::Word1D& w) {
  const int n = w.size();
  for (int len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (int i = 0; i < n && repeats; ++i) {
      repeats = w[i] == w[i % len];
    }
    if (repeats) return false;
  }
  return true;
}

// Direct search over all (V, p, q) decompositions with p >= 2 or q >= 2.
inline bool brute_force_primitive_2d(const words::Word2D& w) {
  const int m = w.rows();
  const int n = w.cols();
  for (int p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    for (int q = 1; q <= n; ++q) {
      if (n % q != 0 || (p == 1 && q == 1)) continue;
      const int r = m / p;
      const int c = n / q;
      bool matches = true;
      for (int i = 0; i < m && matches; ++i) {
        for (int j = 0; j < n; ++j) {
          if (w.at(i, j) != w.at(i % r, j % c)) {
            matches = false;
            break;
          }
        }
      }
      if (matches) return false;
    }
  }
  return true;
}

// All binary words of dimension m x n, in cell-bitmask order.
inline std::vector<words::Word2D> all_binary_words(int m, int n) {
  std::vector<words::Word2D> out;
  const int bits = m * n;
  out.reserve(std::size_t(1) << bits);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << bits); ++mask) {
    std::vector<words::Symbol> cells(static_cast<std::size_t>(bits));
    for (int b = 0; b < bits; ++b) {
      cells[static_cast<std::size_t>(b)] = static_cast<words::Symbol>(mask >> b & 1);
    }
    out.emplace_back(m, n, 2, std::move(cells));
  }
  return out;
}

// All sorted triples with a >= b >= c >= 1 and a + b + c = q, over denominator
// q. skip_half drops right triangles (2a = q).
inline std::vector<pedal::SortedTriple> sorted_triples_with_denominator(int q, bool skip_half) {
  std::vector<pedal::SortedTriple> out;
  for (int a = (q + 2) / 3; a <= q - 2; ++a) {
    if (skip_half && 2 * a == q) continue;
    for (int b = (q - a + 1) / 2; b <= std::min(a, q - a - 1); ++b) {
      const int c = q - a - b;
      if (c < 1 || c > b) continue;
      out.push_back(pedal::SortedTriple(Rational(a, q), Rational(b, q), Rational(c, q)));
    }
  }
  return out;
}

// Nondegenerate sorted triples (members of C*) with denominators up to
// max_denominator.
inline std::vector<pedal::SortedTriple> sample_cstar_triples(int max_denominator) {
  std::vector<pedal::SortedTriple> out;
  for (int q = 3; q <= max_denominator; ++q) {
    for (pedal::SortedTriple& t : sorted_triples_with_denominator(q, /*skip_half=*/true)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline Rational squared_distance(const pedal::Vec3& p, const pedal::Vec3& q) {
  Rational total = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational d = p[i] - q[i];
    total += d * d;
  }
  return total;
}

}  // namespace pedalwords::testing
