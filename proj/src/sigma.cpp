#include "perfect/sigma.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <string>

#include "perfect/factorization.hpp"

namespace perfect {

namespace {

void require_positive(const Natural& n, const char* what) {
  if (n.is_zero()) throw Error(ErrorCode::SigmaAtZero, std::string(what) + " undefined at 0");
}

std::uint64_t checked_scan_limit(const Natural& limit) {
  if (limit.is_zero()) throw Error(ErrorCode::SieveLimit, "scan limit must be at least 1");
  if (limit > kMaxScanLimit) {
    throw Error(ErrorCode::SieveLimit,
                "scan limit " + limit.to_string() + " exceeds " + std::to_string(kMaxScanLimit));
  }
  return limit.to_u64();
}

std::vector<Natural> scan_table(std::uint64_t limit, std::uint64_t memory_cap) {
  const SigmaTable table = sigma_sieve(Natural(limit), memory_cap);
  const auto values = table.values();
  std::vector<Natural> out;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (values[n] == 2 * n) out.emplace_back(n);
  }
  return out;
}

std::vector<Natural> scan_segmented(std::uint64_t limit, std::uint64_t stride) {
  std::vector<Natural> out;
  for_each_sigma(1, limit + 1, stride, [&](std::uint64_t n, std::uint64_t s) {
    if (s == 2 * n) out.emplace_back(n);
  });
  return out;
}

std::vector<Natural> scan_euclid_odd(std::uint64_t limit) {
  std::vector<Natural> even = euclid_perfects_up_to(Natural(limit));
  std::vector<Natural> odd = scan_segmented(limit, 2);
  std::vector<Natural> out;
  out.reserve(even.size() + odd.size());
  std::merge(even.begin(), even.end(), odd.begin(), odd.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Natural> divisors(const Natural& n) {
  require_positive(n, "divisors");
  const std::uint64_t v = n.to_u64();
  std::vector<Natural> low;
  std::vector<Natural> high;
  for (std::uint64_t d = 1; d <= v / d; ++d) {
    if (v % d != 0) continue;
    low.emplace_back(d);
    if (d != v / d) high.emplace_back(v / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Natural sigma_naive(const Natural& n) {
  require_positive(n, "sigma");
  Natural sum;
  for (const Natural& d : divisors(n)) sum += d;
  return sum;
}

Natural sigma_fast(const Natural& n) {
  require_positive(n, "sigma");
  Natural out = 1;
  for (const auto& [p, e] : prime_power_factors(n)) {
    out *= (pow(p, Natural(e + 1)) - 1) / (p - 1);
  }
  return out;
}

bool is_perfect(const Natural& n) {
  require_positive(n, "sigma");
  return sigma_fast(n) == n * 2;
}

std::uint64_t sieve_memory_cap() {
  const char* env = std::getenv("PERFECT_SIEVE_MEMORY_CAP");
  if (env == nullptr || *env == '\0') return kDefaultSieveMemoryCap;
  return Natural::parse(env).to_u64();
}

Natural SigmaTable::operator[](std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw Error(ErrorCode::OutOfRange,
                "sigma table index " + std::to_string(n) + " outside 1.." + std::to_string(limit_));
  }
  return Natural((*values_)[n]);
}

SigmaTable sigma_sieve(const Natural& limit, std::uint64_t memory_cap) {
  if (limit.is_zero()) throw Error(ErrorCode::SieveLimit, "sieve limit must be at least 1");
  const std::uint64_t entries_cap = memory_cap / sizeof(std::uint64_t);
  if (limit >= entries_cap) {
    throw Error(ErrorCode::SieveLimit, "sigma table for limit " + limit.to_string() + " needs more than " +
                                           std::to_string(memory_cap) + " bytes");
  }
  const std::uint64_t n = limit.to_u64();
  auto values = std::make_shared<std::vector<std::uint64_t>>(n + 1, 0);
  auto& t = *values;
  for (std::uint64_t d = 1; d <= n; ++d) {
    for (std::uint64_t m = d; m <= n; m += d) t[m] += d;
  }
  return SigmaTable(n, std::move(values));
}

std::vector<Natural> euclid_perfects_up_to(const Natural& limit) {
  std::vector<Natural> out;
  for (std::uint64_t k = 2;; ++k) {
    const Natural mersenne = pow(Natural(2), Natural(k)) - 1;
    const Natural n = (Natural(1) << (k - 1)) * mersenne;
    if (n > limit) break;
    if (lucas_lehmer(Natural(k))) out.push_back(n);
  }
  return out;
}

std::vector<Natural> perfect_up_to(const Natural& limit, ScanStrategy strategy, std::uint64_t memory_cap) {
  const std::uint64_t n = checked_scan_limit(limit);
  switch (strategy) {
    case ScanStrategy::Automatic:
      if (n < std::min(memory_cap, kAutomaticTableBytes) / sizeof(std::uint64_t)) return scan_table(n, memory_cap);
      return scan_euclid_odd(n);
    case ScanStrategy::Table:
      return scan_table(n, memory_cap);
    case ScanStrategy::Segmented:
      return scan_segmented(n, 1);
    case ScanStrategy::EuclidOdd:
      return scan_euclid_odd(n);
    case ScanStrategy::CrossChecked: {
      auto sieved = scan_segmented(n, 1);
      const auto generated = scan_euclid_odd(n);
      if (sieved != generated) {
        throw Error(ErrorCode::StrategyMismatch,
                    "sieve scan and Euclid/odd scan disagree below " + limit.to_string());
      }
      return sieved;
    }
  }
  return {};
}

namespace detail {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  PrimeStream stream;
  for (std::uint64_t p = stream.next(); p <= bound; p = stream.next()) out.push_back(p);
  return out;
}

void segmented_sigma(std::uint64_t low, std::uint64_t high, std::uint64_t stride,
                     std::span<const std::uint64_t> primes, std::vector<std::uint64_t>& out) {
  const std::uint64_t count = (high - low + stride - 1) / stride;
  std::vector<std::uint64_t> rem(count);
  out.assign(count, 1);
  for (std::uint64_t j = 0; j < count; ++j) rem[j] = low + j * stride;

  for (const std::uint64_t p : primes) {
    if (p * p > high - 1) break;
    if (stride % p == 0) continue;  // no multiples of p in an odd-only run
    std::uint64_t m = (low + p - 1) / p * p;
    while ((m - low) % stride != 0) m += p;
    for (; m < high; m += p * stride) {
      const std::uint64_t j = (m - low) / stride;
      std::uint64_t r = rem[j] / p;
      std::uint64_t power = p;
      std::uint64_t term = 1 + p;
      while (r % p == 0) {
        r /= p;
        power *= p;
        term += power;
      }
      rem[j] = r;
      out[j] *= term;
    }
  }
  // At most one prime factor above sqrt(high) survives.
  for (std::uint64_t j = 0; j < count; ++j) {
    if (rem[j] > 1) out[j] *= rem[j] + 1;
  }
}

}  // namespace detail

}  // namespace perfect
