#pragma once

// Brute-force reference routines for the tests. None of these call into the
// library's arithmetic paths beyond plain Natural construction.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::uint64_t common_divisor_gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  std::uint64_t best = 1;
  for (std::uint64_t d = 1; d <= std::min(a, b); ++d) {
    if (a % d == 0 && b % d == 0) best = d;
  }
  return best;
}

inline mpz_class repeated_product(std::uint64_t base, std::uint64_t exp) {
  mpz_class out = 1;
  for (std::uint64_t j = 0; j < exp; ++j) out *= base;
  return out;
}

inline bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) count += (d * d == n) ? 1 : 2;
  }
  return count;
}

inline std::uint64_t divisor_sum(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) sum += (d * d == n) ? d : d + n / d;
  }
  return sum;
}

/// (odd part, number of halvings).
inline std::pair<std::uint64_t, std::uint64_t> halve(std::uint64_t n) {
  std::uint64_t k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  return {n, k};
}

/// Number of odd primes whose exponent in n is odd.
inline int odd_exponent_count(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    count += e % 2;
  }
  if (n > 1) ++count;
  return count;
}

/// Exact sign of a/b - c/d by cross multiplication on raw GMP integers.
inline int compare_fractions(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  const mpz_class diff = a * d - c * b;
  return sgn(diff) * sgn(b) * sgn(d);
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed5eedULL + salt); }

}  // namespace oracle
