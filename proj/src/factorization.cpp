#include "perfect/factorization.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace perfect {

namespace {

constexpr std::size_t kSegmentOdds = 1 << 15;
constexpr std::uint32_t kSmallPrimeLimit = 1 << 16;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  mpz_sqrt(z.get_mpz_t(), z.get_mpz_t());
  return mpz_get_ui(z.get_mpz_t());
}

// One strong-probable-prime round: n - 1 = d * 2^s with d odd.
bool strong_probable_prime(const mpz_class& n, const mpz_class& d, std::uint64_t s, unsigned long base) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class x;
  const mpz_class a(base);
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (std::uint64_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint32_t p : small_primes()) {
    const std::uint64_t pp = p;
    if (pp * pp > n) return true;
    if (n % pp == 0) return n == pp;
  }
  return true;
}

std::optional<std::uint64_t> mersenne_exponent(const Natural& n) {
  const Natural next = n + 1;
  const std::uint64_t bits = next.bit_length();
  if (next.trailing_zeros() + 1 != bits) return std::nullopt;
  return bits - 1;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (const std::uint64_t p : simple_sieve(kSmallPrimeLimit)) out.push_back(static_cast<std::uint32_t>(p));
    return out;
  }();
  return primes;
}

// ---------------------------------------------------------------- PrimeStream

PrimeStream::PrimeStream() : segment_{2}, segment_low_(3) {}

std::uint64_t PrimeStream::next() {
  if (cursor_ == segment_.size()) refill();
  return segment_[cursor_++];
}

void PrimeStream::refill() {
  segment_.clear();
  cursor_ = 0;
  const std::uint64_t low = segment_low_;
  const std::uint64_t high = low + 2 * kSegmentOdds;  // exclusive; low is odd
  const std::uint64_t root = isqrt_u64(high - 1);
  if (base_limit_ < root) {
    base_limit_ = std::max<std::uint64_t>(2 * root, kSmallPrimeLimit);
    base_primes_ = simple_sieve(base_limit_);
    base_primes_.erase(base_primes_.begin());  // drop 2
  }

  std::vector<bool> composite(kSegmentOdds, false);
  for (const std::uint64_t p : base_primes_) {
    if (p * p >= high) break;
    std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
    if (start % 2 == 0) start += p;
    for (std::uint64_t m = start; m < high; m += 2 * p) composite[(m - low) / 2] = true;
  }
  for (std::size_t j = 0; j < kSegmentOdds; ++j) {
    const std::uint64_t v = low + 2 * j;
    if (!composite[j] && v > 1) segment_.push_back(v);
  }
  segment_low_ = high;
  if (segment_.empty()) refill();
}

// ---------------------------------------------------------------- primality

bool lucas_lehmer(const Natural& k) {
  if (k < 2) {
    throw Error(ErrorCode::LucasLehmerExponent, "Lucas-Lehmer needs k >= 2, got " + k.to_string());
  }
  const std::uint64_t p = k.to_u64();
  if (p == 2) return true;  // 3 is prime; the recurrence is for odd prime exponents
  if (!is_prime(k)) return false;

  mpz_class mersenne = 1;
  mpz_mul_2exp(mersenne.get_mpz_t(), mersenne.get_mpz_t(), p);
  mersenne -= 1;

  mpz_class s = 4;
  mpz_class hi;
  for (std::uint64_t step = 0; step + 2 < p; ++step) {
    s *= s;
    // x mod (2^p - 1) == (x mod 2^p) + (x >> p), applied until it fits.
    while (cmp(s, mersenne) > 0) {
      mpz_fdiv_q_2exp(hi.get_mpz_t(), s.get_mpz_t(), p);
      mpz_fdiv_r_2exp(s.get_mpz_t(), s.get_mpz_t(), p);
      s += hi;
    }
    if (s == mersenne) s = 0;
    if (cmp(s, 2) < 0) s += mersenne;
    s -= 2;
  }
  return sgn(s) == 0;
}

bool is_prime(const Natural& n) {
  if (n < kTrialDivisionPrimalityBound) return is_prime_trial(n.to_u64());

  if (const auto k = mersenne_exponent(n)) return lucas_lehmer(Natural(*k));

  const mpz_class& z = n.mpz();
  for (const std::uint32_t p : small_primes()) {
    if (p > 1000) break;
    if (mpz_fdiv_ui(z.get_mpz_t(), p) == 0) return false;  // n > p here
  }

  static const mpz_class exact_bound(kWitnessSetExactBound);
  if (cmp(z, exact_bound) >= 0) {
    throw Error(ErrorCode::PrimalityOutOfRange,
                "no exact primality procedure for non-Mersenne input " + n.to_string());
  }

  const mpz_class n_minus_1 = z - 1;
  const std::uint64_t s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
  mpz_class d;
  mpz_fdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);
  constexpr std::array<unsigned long, 13> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](unsigned long a) { return strong_probable_prime(z, d, s, a); });
}

// ---------------------------------------------------------------- factoring

Natural PrimePowerFactorization::product() const {
  Natural out = 1;
  for (const auto& [prime, exponent] : pairs_) out *= pow(prime, Natural(exponent));
  return out;
}

PrimePowerFactorization prime_power_factors(const Natural& n) {
  if (n.is_zero()) throw Error(ErrorCode::FactorOfZero, "cannot factor 0");

  std::vector<PrimePower> pairs;
  mpz_class rem = n.mpz();

  if (const std::uint64_t twos = n.trailing_zeros(); twos > 0) {
    pairs.push_back({Natural(2), twos});
    mpz_fdiv_q_2exp(rem.get_mpz_t(), rem.get_mpz_t(), twos);
  }

  // A large cofactor is often prime already (Mersenne parts of perfect
  // numbers); settle that before grinding through divisors.
  auto cofactor_is_prime = [&]() {
    if (cmp(rem, kTrialDivisionPrimalityBound) < 0) return false;
    try {
      return is_prime(Natural::from_mpz(rem));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PrimalityOutOfRange) return false;
      throw;
    }
  };

  auto divide_out = [&](std::uint64_t p) {
    if (mpz_fdiv_ui(rem.get_mpz_t(), p) != 0) return false;
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
      ++e;
    }
    pairs.push_back({Natural(p), e});
    return true;
  };

  auto finish = [&]() {
    if (cmp(rem, 1) > 0) pairs.push_back({Natural::from_mpz(rem), 1});
    return PrimePowerFactorization(std::move(pairs));
  };

  if (cofactor_is_prime()) return finish();

  auto try_prime = [&](std::uint64_t p) -> bool {
    // true when factoring is complete
    mpz_class square(static_cast<unsigned long>(p));
    square *= p;
    if (cmp(square, rem) > 0) return true;
    if (divide_out(p) && cofactor_is_prime()) return true;
    return false;
  };

  for (const std::uint32_t p : small_primes()) {
    if (p == 2) continue;
    if (try_prime(p)) return finish();
  }
  PrimeStream stream;
  for (std::uint64_t p = stream.next();; p = stream.next()) {
    if (p <= kSmallPrimeLimit) continue;
    if (p > kMaxTrialDivisor) {
      throw Error(ErrorCode::TrialDivisionExhausted,
                  "cofactor " + rem.get_str() + " of " + n.to_string() +
                      " has no prime factor below the trial-division limit");
    }
    if (try_prime(p)) return finish();
  }
}

OddSplit odd_split(const Natural& n) {
  if (n.is_zero()) throw Error(ErrorCode::FactorOfZero, "odd_split of 0 is undefined");
  const std::uint64_t twos = n.trailing_zeros();
  return OddSplit{n >> twos, twos};
}

}  // namespace perfect
