#pragma once

#include <cstdint>

#include "perfect/factorization.hpp"
#include "perfect/numkernel.hpp"

namespace perfect {

/// n = 2^(k-1) * mersenne with mersenne = 2^k - 1 prime.
struct EvenPerfectForm {
  std::uint64_t k = 0;
  Natural mersenne;
  Natural n;

  /// The power of two in n, k - 1.
  std::uint64_t two_adic() const { return k - 1; }

  friend bool operator==(const EvenPerfectForm&, const EvenPerfectForm&) = default;
};

/// n = p^i * m^2 with p an odd prime, i and m odd, and p not dividing m.
struct OddDecomposition {
  Natural p;
  std::uint64_t i = 0;
  Natural m;

  Natural value() const;

  friend bool operator==(const OddDecomposition&, const OddDecomposition&) = default;
};

/// Builds 2^(k-1)(2^k - 1) and confirms sigma(n) = 2n. Throws
/// NotMersennePrime when 2^k - 1 is composite (or k < 2).
EvenPerfectForm euclid_perfect(std::uint64_t k);

/// Recovers k from the 2-adic valuation of an even perfect n and checks that
/// the odd part is the Mersenne prime 2^k - 1. Throws OddInput / NotPerfect
/// for inputs outside the hypothesis; StructureViolation means a bug.
EvenPerfectForm euler_decompose_even(const Natural& n);

/// The single pair of the factorization whose exponent is odd.
/// NoOddExponent when there is none (n is a square), MultipleOddExponents
/// when there are several.
PrimePower find_odd_exponent_pair(const PrimePowerFactorization& f);

/// Splits an odd n into p^i * m^2: p and i from the unique odd-exponent pair,
/// m from the remaining pairs with their exponents halved. Perfection is not
/// required, only the shape.
OddDecomposition euler_decompose_odd(const Natural& n);

}  // namespace perfect
