#include "pedalwords/counting.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pedalwords/errors.hpp"

namespace pedalwords::counting {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw DomainError(std::string(what) + " must be >= 1");
  }
}

Count int_pow(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  require_positive(n, "n");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  require_positive(n, "n");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int mobius(std::uint64_t n) {
  require_positive(n, "n");
  std::uint64_t rest = n;
  int sign = 1;
  for (std::uint64_t p : distinct_prime_factors(n)) {
    rest /= p;
    sign = -sign;
  }
  // rest > 1 exactly when some prime divided n more than once.
  return rest == 1 ? sign : 0;
}

Count psi(std::uint64_t k, std::uint64_t m, std::uint64_t n) {
  require_positive(k, "k");
  require_positive(m, "m");
  require_positive(n, "n");
  Count total = 0;
  for (std::uint64_t d1 : divisors(m)) {
    const int mu1 = mobius(d1);
    if (mu1 == 0) continue;
    for (std::uint64_t d2 : divisors(n)) {
      const int mu2 = mobius(d2);
      if (mu2 == 0) continue;
      total += mu1 * mu2 * int_pow(k, (m / d1) * (n / d2));
    }
  }
  return total;
}

Count phi(std::uint64_t n) {
  require_positive(n, "n");
  return int_pow(4, n) - int_pow(2, n);
}

Count chi_inclusion_exclusion(std::uint64_t n) {
  require_positive(n, "n");
  const std::vector<std::uint64_t> primes = distinct_prime_factors(n);
  Count total = 0;
  for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
    std::uint64_t product = 1;
    int sign = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) {
        product *= primes[i];
        sign = -sign;
      }
    }
    total += sign * phi(n / product);
  }
  return total;
}

Count chi_mobius(std::uint64_t n) {
  require_positive(n, "n");
  Count total = 0;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(d);
    if (mu == 0) continue;
    total += mu * (int_pow(4, n / d) - int_pow(2, n / d));
  }
  return total;
}

}  // namespace pedalwords::counting
