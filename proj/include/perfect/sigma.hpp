#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "perfect/numkernel.hpp"

namespace perfect {

/// Ascending list of every divisor of n, found by trial division up to
/// sqrt(n) without consulting the factorization code. n must fit in 64 bits.
std::vector<Natural> divisors(const Natural& n);

/// Sum of divisors(n). Independent oracle for sigma_fast.
Natural sigma_naive(const Natural& n);

/// Multiplicative sigma from prime_power_factors:
/// sigma(p^e) = (p^(e+1) - 1) / (p - 1), multiplied over coprime prime powers.
Natural sigma_fast(const Natural& n);

/// sigma(n) == 2n.
bool is_perfect(const Natural& n);

/// Default byte budget for sieve tables when PERFECT_SIEVE_MEMORY_CAP is unset.
inline constexpr std::uint64_t kDefaultSieveMemoryCap = std::uint64_t{1} << 30;

/// Reads PERFECT_SIEVE_MEMORY_CAP (bytes); falls back to 1 GiB.
std::uint64_t sieve_memory_cap();

/// Immutable table of sigma(0..limit); entry 0 is unused and reads as 0.
/// Copies share storage and may be read from any thread.
class SigmaTable {
 public:
  std::uint64_t limit() const { return limit_; }
  /// Throws OutOfRange for n = 0 or n > limit.
  Natural operator[](std::uint64_t n) const;
  std::span<const std::uint64_t> values() const { return *values_; }

 private:
  friend SigmaTable sigma_sieve(const Natural& limit, std::uint64_t memory_cap);
  SigmaTable(std::uint64_t limit, std::shared_ptr<const std::vector<std::uint64_t>> values)
      : limit_(limit), values_(std::move(values)) {}

  std::uint64_t limit_;
  std::shared_ptr<const std::vector<std::uint64_t>> values_;
};

/// Divisor-accumulation sieve: every d adds itself to each of its multiples.
/// Needs 8 * (limit + 1) bytes; throws SieveLimit when that exceeds
/// memory_cap or limit is 0.
SigmaTable sigma_sieve(const Natural& limit, std::uint64_t memory_cap = sieve_memory_cap());

/// How perfect_up_to finds its answer.
enum class ScanStrategy {
  /// Table sieve while the table fits in min(memory cap,
  /// kAutomaticTableBytes), otherwise EuclidOdd.
  Automatic,
  /// Full sigma_sieve table, then a scan for sigma(n) = 2n.
  Table,
  /// Segmented multiplicative sigma sieve over every n; bounded memory.
  Segmented,
  /// Even perfects from Lucas-Lehmer exponents via 2^(k-1)(2^k - 1), plus
  /// a segmented sigma scan of the odd n only.
  EuclidOdd,
  /// Runs Segmented and EuclidOdd and throws StrategyMismatch if they
  /// disagree.
  CrossChecked,
};

/// Table size above which the automatic strategy stops using sigma_sieve.
inline constexpr std::uint64_t kAutomaticTableBytes = std::uint64_t{64} << 20;

/// Largest limit perfect_up_to accepts.
inline constexpr std::uint64_t kMaxScanLimit = 1'000'000'000'000;

/// Every perfect n <= limit, ascending. limit = 0 or above kMaxScanLimit
/// throws SieveLimit.
std::vector<Natural> perfect_up_to(const Natural& limit, ScanStrategy strategy = ScanStrategy::Automatic,
                                   std::uint64_t memory_cap = sieve_memory_cap());

/// Even perfect numbers 2^(k-1)(2^k - 1) <= limit, one per Mersenne
/// exponent k accepted by lucas_lehmer.
std::vector<Natural> euclid_perfects_up_to(const Natural& limit);

/// sigma(n) for n in [low, high) stepping by `stride` (1 or 2), computed
/// multiplicatively segment by segment. Calls visit(n, sigma) in order.
template <class Visit>
void for_each_sigma(std::uint64_t low, std::uint64_t high, std::uint64_t stride, Visit&& visit);

namespace detail {
inline constexpr std::uint64_t kSigmaSegment = 1 << 18;
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
void segmented_sigma(std::uint64_t low, std::uint64_t high, std::uint64_t stride,
                     std::span<const std::uint64_t> primes, std::vector<std::uint64_t>& out);
}  // namespace detail

template <class Visit>
void for_each_sigma(std::uint64_t low, std::uint64_t high, std::uint64_t stride, Visit&& visit) {
  if (low >= high) return;
  const auto primes = detail::primes_up_to(Natural(high - 1).isqrt().to_u64());
  std::vector<std::uint64_t> sigmas;
  for (std::uint64_t lo = low; lo < high;) {
    const std::uint64_t hi = std::min(high, lo + detail::kSigmaSegment * stride);
    detail::segmented_sigma(lo, hi, stride, primes, sigmas);
    for (std::size_t j = 0; j < sigmas.size(); ++j) visit(lo + j * stride, sigmas[j]);
    lo += sigmas.size() * stride;
  }
}

}  // namespace perfect
