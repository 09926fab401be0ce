#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "perfect/factorization.hpp"

using namespace perfect;

namespace {

PrimePowerFactorization ppf(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  std::vector<PrimePower> out;
  for (const auto& [p, e] : pairs) out.push_back({Natural(p), e});
  return PrimePowerFactorization(std::move(out));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(127));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(2047));
  CHECK(is_prime(2));
  CHECK(is_prime(8191));
}

TEST_CASE("is_prime matches the divisor-count oracle up to 10^5") {
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    REQUIRE_MESSAGE(is_prime(n) == (oracle::divisor_count(n) == 2), "n = ", n);
  }
}

TEST_CASE("is_prime above the trial-division range") {
  // 1000003 is prime; 1000001 = 101 * 9901.
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
  auto gen = oracle::rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1'000'000, 50'000'000);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = dist(gen);
    CHECK_MESSAGE(is_prime(n) == oracle::trial_prime(n), "n = ", n);
  }
  // Strong pseudoprimes to several small bases: 3215031751 = 151*751*28351
  // fools bases 2, 3, 5, 7.
  CHECK_FALSE(is_prime(Natural::parse("3215031751")));
  CHECK_FALSE(is_prime(Natural::parse("3825123056546413051")));
  // 2^89 - 1 is a Mersenne prime and routes through Lucas-Lehmer.
  CHECK(is_prime((Natural(1) << 89) - 1));
  CHECK_FALSE(is_prime((Natural(1) << 67) - 1));
  // Largest 64-bit prime.
  CHECK(is_prime(Natural::parse("18446744073709551557")));
}

TEST_CASE("is_prime refuses non-Mersenne inputs beyond the exact witness bound") {
  // (2^61 - 1)(2^31 - 1) is about 2^92: above the bound, not Mersenne-shaped,
  // and free of factors below 1000.
  const Natural n = ((Natural(1) << 61) - 1) * ((Natural(1) << 31) - 1);
  CHECK(n > Natural::parse(kWitnessSetExactBound));
  CHECK(code_of([&] { (void)is_prime(n); }) == ErrorCode::PrimalityOutOfRange);
  // 2^127 - 1 is far above the bound but goes through Lucas-Lehmer.
  CHECK(is_prime((Natural(1) << 127) - 1));
  // Small factors settle large inputs without the witness test.
  CHECK_FALSE(is_prime(n * 3));
}

TEST_CASE("lucas_lehmer examples") {
  CHECK(lucas_lehmer(7));
  CHECK_FALSE(lucas_lehmer(11));
  CHECK(lucas_lehmer(13));
  CHECK(lucas_lehmer(2));
  CHECK(code_of([] { (void)lucas_lehmer(1); }) == ErrorCode::LucasLehmerExponent);
  CHECK(code_of([] { (void)lucas_lehmer(0); }) == ErrorCode::LucasLehmerExponent);
}

TEST_CASE("lucas_lehmer agrees with trial division for k in 2..31") {
  std::set<std::uint64_t> exponents;
  for (std::uint64_t k = 2; k <= 31; ++k) {
    const std::uint64_t mersenne = (std::uint64_t{1} << k) - 1;
    const bool ll = lucas_lehmer(k);
    CHECK_MESSAGE(ll == oracle::trial_prime(mersenne), "k = ", k);
    if (ll) exponents.insert(k);
  }
  CHECK(exponents == std::set<std::uint64_t>{2, 3, 5, 7, 13, 17, 19, 31});
}

TEST_CASE("lucas_lehmer finds the known exponents up to 130") {
  std::vector<std::uint64_t> found;
  for (std::uint64_t k = 2; k <= 130; ++k) {
    if (lucas_lehmer(k)) found.push_back(k);
  }
  CHECK(found == std::vector<std::uint64_t>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127});
}

TEST_CASE("prime_power_factors examples") {
  CHECK(prime_power_factors(496) == ppf({{2, 4}, {31, 1}}));
  CHECK(prime_power_factors(1).empty());
  CHECK(prime_power_factors(675) == ppf({{3, 3}, {5, 2}}));
  CHECK(code_of([] { (void)prime_power_factors(0); }) == ErrorCode::FactorOfZero);
}

TEST_CASE("prime_power_factors reconstructs every n up to 10^5") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const PrimePowerFactorization f = prime_power_factors(n);
    REQUIRE(f.product() == n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      const auto& [p, e] = f.pairs()[j];
      REQUIRE(e >= 1);
      REQUIRE(oracle::trial_prime(p.to_u64()));
      if (j > 0) REQUIRE(f.pairs()[j - 1].prime < p);
    }
  }
}

TEST_CASE("prime_power_factors on large structured inputs") {
  // 2^60 (2^61 - 1): the Mersenne cofactor is recognised as prime.
  const Natural m61 = (Natural(1) << 61) - 1;
  const Natural n = (Natural(1) << 60) * m61;
  CHECK(prime_power_factors(n) == PrimePowerFactorization({{Natural(2), 60}, {m61, 1}}));
  // Two primes above 2^16: exercises the incremental sieve.
  const Natural semi = Natural(1000003) * Natural(999983);
  CHECK(prime_power_factors(semi) == ppf({{999983, 1}, {1000003, 1}}));
  CHECK(prime_power_factors(Natural(65537) * 65537 * 3) == ppf({{3, 1}, {65537, 2}}));
}

TEST_CASE("odd_split") {
  CHECK(odd_split(8128) == OddSplit{127, 6});
  CHECK(odd_split(7) == OddSplit{7, 0});
  CHECK(odd_split(96) == OddSplit{3, 5});
  CHECK(code_of([] { (void)odd_split(0); }) == ErrorCode::FactorOfZero);
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const OddSplit s = odd_split(n);
    const auto [odd, k] = oracle::halve(n);
    REQUIRE(s.odd_part == odd);
    REQUIRE(s.two_adic == k);
    REQUIRE(s.odd_part.is_odd());
  }
}

TEST_CASE("PrimeStream yields the primes in order") {
  PrimeStream stream;
  std::uint64_t count = 0;
  std::uint64_t last = 0;
  for (std::uint64_t p = stream.next(); p < 2'000'000; p = stream.next()) {
    REQUIRE(p > last);
    last = p;
    ++count;
  }
  CHECK(count == 148933);  // pi(2 * 10^6)
  PrimeStream again;
  for (std::uint64_t n = 0; n < 2000; ++n) {
    if (oracle::trial_prime(n)) REQUIRE(again.next() == n);
  }
}
