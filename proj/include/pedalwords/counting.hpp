#pragma once

#include <cstdint>
#include <vector>

#include "pedalwords/rational.hpp"

namespace pedalwords::counting {

// Counts are unbounded: 4^n no longer fits in 64 bits once n >= 32.
using Count = Integer;

// Divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Distinct prime factors of n in ascending order (trial division; inputs are
// desk-scale).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// 1 if n = 1; (-1)^k if n is a product of k distinct primes; 0 if a square
// divides n. DomainError on n = 0.
int mobius(std::uint64_t n);

// Number of primitive two-dimensional words of dimension m x n over a k-ary
// alphabet: sum over d1 | m, d2 | n of mu(d1) mu(d2) k^{mn/(d1 d2)}.
Count psi(std::uint64_t k, std::uint64_t m, std::uint64_t n);

// Number of triangles similar to their n-th pedal triangle: 4^n - 2^n.
Count phi(std::uint64_t n);

// Triangles of exact pedal period n by inclusion-exclusion over subsets of the
// distinct prime factors of n: sum of (-1)^|S| phi(n / prod S).
Count chi_inclusion_exclusion(std::uint64_t n);

// The same count as a Moebius-inverted divisor sum:
// sum over d | n of mu(d) (4^{n/d} - 2^{n/d}).
Count chi_mobius(std::uint64_t n);

}  // namespace pedalwords::counting
