#include "perfect/structure.hpp"

#include <string>

#include "perfect/sigma.hpp"

namespace perfect {

namespace {

[[noreturn]] void structure_violation(const std::string& what) {
  throw Error(ErrorCode::StructureViolation, "structure theorem check failed: " + what);
}

}  // namespace

Natural OddDecomposition::value() const { return pow(p, Natural(i)) * m * m; }

EvenPerfectForm euclid_perfect(std::uint64_t k) {
  if (k < 2 || !lucas_lehmer(Natural(k))) {
    throw Error(ErrorCode::NotMersennePrime,
                "2^" + std::to_string(k) + " - 1 is not a Mersenne prime (k = " + std::to_string(k) + ")");
  }
  EvenPerfectForm form;
  form.k = k;
  form.mersenne = (Natural(1) << k) - 1;
  form.n = (Natural(1) << (k - 1)) * form.mersenne;
  if (!is_perfect(form.n)) structure_violation("2^(k-1)(2^k - 1) is not perfect for k = " + std::to_string(k));
  return form;
}

EvenPerfectForm euler_decompose_even(const Natural& n) {
  if (n.is_zero() || n.is_odd()) {
    throw Error(ErrorCode::OddInput, n.to_string() + " is not a positive even number");
  }
  if (!is_perfect(n)) throw Error(ErrorCode::NotPerfect, n.to_string() + " is not perfect");

  const OddSplit split = odd_split(n);
  const std::uint64_t k = split.two_adic + 1;
  const Natural mersenne = (Natural(1) << k) - 1;
  if (split.odd_part != mersenne) {
    structure_violation("odd part of " + n.to_string() + " is " + split.odd_part.to_string() + ", not 2^" +
                        std::to_string(k) + " - 1");
  }
  if (!is_prime(mersenne)) structure_violation("2^" + std::to_string(k) + " - 1 is composite");
  EvenPerfectForm form{k, mersenne, n};
  if (euclid_perfect(k) != form) structure_violation("Euclid construction does not reproduce " + n.to_string());
  return form;
}

PrimePower find_odd_exponent_pair(const PrimePowerFactorization& f) {
  const PrimePower* found = nullptr;
  for (const PrimePower& pair : f) {
    if (pair.exponent % 2 == 0) continue;
    if (found != nullptr) {
      throw Error(ErrorCode::MultipleOddExponents, "primes " + found->prime.to_string() + " and " +
                                                       pair.prime.to_string() + " both have odd exponents");
    }
    found = &pair;
  }
  if (found == nullptr) {
    throw Error(ErrorCode::NoOddExponent, "no prime has an odd exponent (the number is a perfect square)");
  }
  return *found;
}

OddDecomposition euler_decompose_odd(const Natural& n) {
  if (n.is_even()) throw Error(ErrorCode::EvenInput, n.to_string() + " is even");

  const PrimePowerFactorization f = prime_power_factors(n);
  const PrimePower odd = find_odd_exponent_pair(f);
  if (odd.prime == 2) structure_violation("odd-exponent prime of odd " + n.to_string() + " is 2");

  OddDecomposition d{odd.prime, odd.exponent, Natural(1)};
  for (const PrimePower& pair : f) {
    if (pair.prime == odd.prime) continue;
    d.m *= pow(pair.prime, Natural(pair.exponent / 2));
  }
  if (d.value() != n) structure_violation("p^i * m^2 does not reconstruct " + n.to_string());
  return d;
}

}  // namespace perfect
