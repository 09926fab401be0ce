#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "perfect/sigma.hpp"
#include "perfect/structure.hpp"

using namespace perfect;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

PrimePowerFactorization ppf(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
  std::vector<PrimePower> out;
  for (const auto& [p, e] : pairs) out.push_back({Natural(p), e});
  return PrimePowerFactorization(std::move(out));
}

}  // namespace

TEST_CASE("euclid_perfect") {
  CHECK(euclid_perfect(2).n == 6);
  CHECK(euclid_perfect(5).n == 496);
  const EvenPerfectForm f13 = euclid_perfect(13);
  CHECK(f13.n == 33550336);
  CHECK(f13.mersenne == 8191);
  CHECK(sigma_fast(f13.n) == f13.n * 2);
  for (const std::uint64_t k : {2, 3, 5, 7, 13, 17, 19, 31, 61, 89}) {
    const EvenPerfectForm f = euclid_perfect(k);
    CHECK(is_perfect(f.n));
    CHECK(f.n == (Natural(1) << (k - 1)) * f.mersenne);
  }
  CHECK(code_of([] { (void)euclid_perfect(11); }) == ErrorCode::NotMersennePrime);
  CHECK(code_of([] { (void)euclid_perfect(4); }) == ErrorCode::NotMersennePrime);
  CHECK(code_of([] { (void)euclid_perfect(1); }) == ErrorCode::NotMersennePrime);
  try {
    (void)euclid_perfect(11);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("k = 11") != std::string::npos);
  }
}

TEST_CASE("euler_decompose_even") {
  const EvenPerfectForm f28 = euler_decompose_even(28);
  CHECK(f28.k == 3);
  CHECK(f28.mersenne == 7);
  const EvenPerfectForm f6 = euler_decompose_even(6);
  CHECK(f6.k == 2);
  CHECK(f6.mersenne == 3);
  const EvenPerfectForm f8128 = euler_decompose_even(8128);
  CHECK(f8128.k == 7);
  CHECK(f8128.mersenne == 127);
  CHECK(f8128.two_adic() == 6);
  CHECK(code_of([] { (void)euler_decompose_even(7); }) == ErrorCode::OddInput);
  CHECK(code_of([] { (void)euler_decompose_even(12); }) == ErrorCode::NotPerfect);
  CHECK(code_of([] { (void)euler_decompose_even(0); }) == ErrorCode::OddInput);
}

TEST_CASE("even round trip for k in {2, 3, 5, 7, 13}") {
  for (const std::uint64_t k : {2, 3, 5, 7, 13}) {
    const EvenPerfectForm built = euclid_perfect(k);
    const EvenPerfectForm recovered = euler_decompose_even(built.n);
    CHECK(recovered == built);
    CHECK(euclid_perfect(recovered.k).n == built.n);
  }
}

TEST_CASE("find_odd_exponent_pair") {
  CHECK(find_odd_exponent_pair(ppf({{3, 3}, {5, 2}})) == PrimePower{Natural(3), 3});
  CHECK(find_odd_exponent_pair(ppf({{7, 1}})) == PrimePower{Natural(7), 1});
  CHECK(code_of([] { (void)find_odd_exponent_pair(ppf({{3, 2}, {5, 2}})); }) == ErrorCode::NoOddExponent);
  CHECK(code_of([] { (void)find_odd_exponent_pair(ppf({{3, 1}, {5, 1}})); }) == ErrorCode::MultipleOddExponents);
  CHECK(code_of([] { (void)find_odd_exponent_pair(PrimePowerFactorization{}); }) == ErrorCode::NoOddExponent);
}

TEST_CASE("euler_decompose_odd") {
  CHECK(euler_decompose_odd(675) == OddDecomposition{Natural(3), 3, Natural(5)});
  CHECK(euler_decompose_odd(7) == OddDecomposition{Natural(7), 1, Natural(1)});
  CHECK(euler_decompose_odd(33075) == OddDecomposition{Natural(3), 3, Natural(35)});
  CHECK(code_of([] { (void)euler_decompose_odd(28); }) == ErrorCode::EvenInput);
  CHECK(code_of([] { (void)euler_decompose_odd(225); }) == ErrorCode::NoOddExponent);
  CHECK(code_of([] { (void)euler_decompose_odd(15); }) == ErrorCode::MultipleOddExponents);
  CHECK(code_of([] { (void)euler_decompose_odd(1); }) == ErrorCode::NoOddExponent);
}

TEST_CASE("odd decomposition over every odd n up to 10^5") {
  std::uint64_t eligible = 0;
  for (std::uint64_t n = 3; n <= 100000; n += 2) {
    const int odd_exponents = oracle::odd_exponent_count(n);
    if (odd_exponents == 1) {
      const OddDecomposition d = euler_decompose_odd(n);
      REQUIRE(d.value() == n);
      REQUIRE(d.p.is_odd());
      REQUIRE(d.i % 2 == 1);
      REQUIRE(d.m.is_odd());
      REQUIRE(!(d.m % d.p).is_zero());
      REQUIRE(euler_decompose_odd(n) == d);
      ++eligible;
    } else {
      const ErrorCode expected = odd_exponents == 0 ? ErrorCode::NoOddExponent : ErrorCode::MultipleOddExponents;
      REQUIRE(code_of([&] { (void)euler_decompose_odd(n); }) == expected);
    }
  }
  CHECK(eligible > 0);
}

TEST_CASE("m carries exactly half of each remaining exponent") {
  // 3^5 * 5^4 * 11^2 * 13^6
  const Natural n = pow(Natural(3), 5) * pow(Natural(5), 4) * pow(Natural(11), 2) * pow(Natural(13), 6);
  const OddDecomposition d = euler_decompose_odd(n);
  CHECK(d.p == 3);
  CHECK(d.i == 5);
  CHECK(prime_power_factors(d.m) == ppf({{5, 2}, {11, 1}, {13, 3}}));
}
