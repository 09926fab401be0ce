#pragma once

#include <cstdint>
#include <vector>

#include "perfect/numkernel.hpp"

namespace perfect {

/// Below this bound is_prime uses plain trial division.
inline constexpr std::uint64_t kTrialDivisionPrimalityBound = 1'000'000;

/// Strong-probable-prime tests to the first thirteen prime bases are exact
/// for every n below this value (3.317... * 10^24).
inline const char* const kWitnessSetExactBound = "3317044064679887385961981";

/// prime_power_factors gives up once the trial divisor passes this value
/// while the cofactor is still composite.
inline constexpr std::uint64_t kMaxTrialDivisor = 100'000'000;

/// Generates the primes in ascending order with a segmented sieve of
/// Eratosthenes. Each instance owns its state.
class PrimeStream {
 public:
  PrimeStream();

  std::uint64_t next();

 private:
  void refill();

  std::vector<std::uint64_t> base_primes_;  // odd primes up to sqrt of the segment end
  std::vector<std::uint64_t> segment_;      // primes found in the current segment
  std::size_t cursor_ = 0;
  std::uint64_t segment_low_ = 0;
  std::uint64_t base_limit_ = 1;
};

/// Primes below 2^16, computed once and never mutated afterwards.
const std::vector<std::uint32_t>& small_primes();

/// Exact primality. Trial division below 10^6; Mersenne numbers 2^k - 1 go
/// through Lucas-Lehmer; everything else below the witness-set bound uses a
/// deterministic strong-probable-prime test. Larger non-Mersenne inputs throw
/// PrimalityOutOfRange.
bool is_prime(const Natural& n);

/// True iff 2^k - 1 is prime. k < 2 throws LucasLehmerExponent.
bool lucas_lehmer(const Natural& k);

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending distinct primes with positive exponents. Empty means 1.
class PrimePowerFactorization {
 public:
  PrimePowerFactorization() = default;
  explicit PrimePowerFactorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// Multiplies the prime powers back together.
  Natural product() const;

  friend bool operator==(const PrimePowerFactorization&, const PrimePowerFactorization&) = default;

 private:
  std::vector<PrimePower> pairs_;
};

/// Factorization by trial division over an incremental prime sieve. Stops
/// early once the remaining cofactor is itself prime. n = 0 throws FactorOfZero.
PrimePowerFactorization prime_power_factors(const Natural& n);

struct OddSplit {
  Natural odd_part;
  std::uint64_t two_adic = 0;

  friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

/// n = odd_part * 2^two_adic with odd_part odd. n = 0 throws FactorOfZero.
OddSplit odd_split(const Natural& n);

}  // namespace perfect
