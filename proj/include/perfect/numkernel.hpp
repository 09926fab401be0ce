#pragma once

// Exact arithmetic foundation: unbounded naturals, signed integers and
// rationals kept in lowest terms. Nothing in this library touches floating
// point.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "perfect/error.hpp"

namespace perfect {

class Integer;

/// Arbitrary-precision nonnegative integer. Operations that would leave the
/// naturals (subtraction below zero, division by zero) throw instead of
/// wrapping.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (value < 0) {
        throw Error(ErrorCode::NegativeNatural,
                    "negative value " + std::to_string(value) + " is not a natural");
      }
    }
    value_ = static_cast<unsigned long>(value);
  }

  /// Parses a plain decimal digit string (no sign, no whitespace).
  static Natural parse(std::string_view digits);

  /// Adopts a GMP value; throws NegativeNatural if it is below zero.
  static Natural from_mpz(mpz_class value);

  std::string to_string() const { return value_.get_str(10); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool is_odd() const { return !is_even(); }

  /// Number of significant bits; 0 for zero.
  std::uint64_t bit_length() const;
  /// Number of trailing zero bits; undefined-input error for zero.
  std::uint64_t trailing_zeros() const;

  bool fits_u64() const { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }
  /// Throws OutOfRange when the value needs more than 64 bits.
  std::uint64_t to_u64() const;

  /// floor(sqrt(value)).
  Natural isqrt() const;

  const mpz_class& mpz() const { return value_; }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }
  friend Natural operator<<(const Natural& lhs, std::uint64_t bits);
  friend Natural operator>>(const Natural& lhs, std::uint64_t bits);

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

 private:
  mpz_class value_;
};

/// Arbitrary-precision signed integer; only used as a rational numerator.
class Integer {
 public:
  Integer() = default;
  Integer(const Natural& n) : value_(n.mpz()) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Integer(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  static Integer from_mpz(mpz_class value);
  static Integer parse(std::string_view text);

  int sign() const { return sgn(value_); }
  Natural magnitude() const;
  std::string to_string() const { return value_.get_str(10); }
  const mpz_class& mpz() const { return value_; }

  Integer operator-() const { return from_mpz(-value_); }
  friend Integer operator+(const Integer& a, const Integer& b) { return from_mpz(a.value_ + b.value_); }
  friend Integer operator-(const Integer& a, const Integer& b) { return from_mpz(a.value_ - b.value_); }
  friend Integer operator*(const Integer& a, const Integer& b) { return from_mpz(a.value_ * b.value_); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& n) { return os << n.to_string(); }

 private:
  mpz_class value_;
};

/// gcd(0, 0) is 0.
Natural gcd(const Natural& a, const Natural& b);

/// base^exp by repeated squaring; 0^0 throws ZeroToZeroPower.
Natural pow(const Natural& base, const Natural& exp);

/// Exact signed fraction. The stored numerator and denominator always have
/// gcd 1 and the denominator is at least 1, so structural equality is value
/// equality.
class Rational {
 public:
  Rational() : den_(1) {}
  Rational(const Integer& numerator, const Natural& denominator);
  Rational(const Natural& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Parses "num/den" or a bare integer.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return num_; }
  const Natural& denominator() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_zero() const { return sign() == 0; }

  /// Canonical "num/den" spelling; the denominator is always present.
  std::string to_string() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  struct Reduced {};
  Rational(Reduced, Integer numerator, Natural denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  friend Rational rat_add(const Rational&, const Rational&);
  friend Rational rat_mul(const Rational&, const Rational&);

  Integer num_;
  Natural den_;
};

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
/// Throws DivisionByZero when b is zero.
Rational rat_div(const Rational& a, const Rational& b);
std::strong_ordering rat_cmp(const Rational& a, const Rational& b);

inline Rational operator+(const Rational& a, const Rational& b) { return rat_add(a, b); }
inline Rational operator-(const Rational& a, const Rational& b) { return rat_sub(a, b); }
inline Rational operator*(const Rational& a, const Rational& b) { return rat_mul(a, b); }
inline Rational operator/(const Rational& a, const Rational& b) { return rat_div(a, b); }
inline std::strong_ordering operator<=>(const Rational& a, const Rational& b) { return rat_cmp(a, b); }
inline Rational& operator+=(Rational& a, const Rational& b) { return a = rat_add(a, b); }

}  // namespace perfect
