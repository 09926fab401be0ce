#include "perfect/numkernel.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace perfect {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::NegativeNatural: return "negative_natural";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::ZeroToZeroPower: return "zero_to_zero_power";
    case ErrorCode::PrimalityOutOfRange: return "primality_out_of_range";
    case ErrorCode::LucasLehmerExponent: return "lucas_lehmer_exponent";
    case ErrorCode::FactorOfZero: return "factor_of_zero";
    case ErrorCode::TrialDivisionExhausted: return "trial_division_exhausted";
    case ErrorCode::SigmaAtZero: return "sigma_undefined_at_zero";
    case ErrorCode::SieveLimit: return "sieve_limit";
    case ErrorCode::StrategyMismatch: return "strategy_mismatch";
    case ErrorCode::NotMersennePrime: return "not_mersenne_prime";
    case ErrorCode::OddInput: return "odd_input";
    case ErrorCode::EvenInput: return "even_input";
    case ErrorCode::NotPerfect: return "not_perfect";
    case ErrorCode::NoOddExponent: return "no_odd_exponent";
    case ErrorCode::MultipleOddExponents: return "multiple_odd_exponents";
    case ErrorCode::StructureViolation: return "structure_violation";
    case ErrorCode::IdentityViolation: return "identity_violation";
    case ErrorCode::HornfeckViolation: return "hornfeck_violation";
    case ErrorCode::CertificateFailure: return "certificate_failure";
    case ErrorCode::CutoffsNotAscending: return "cutoffs_not_ascending";
    case ErrorCode::BoundViolation: return "bound_violation";
  }
  return "unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

// ---------------------------------------------------------------- Natural

Natural Natural::parse(std::string_view digits) {
  if (!all_digits(digits)) {
    throw Error(ErrorCode::ParseError, "not a nonnegative decimal integer: '" + std::string(digits) + "'");
  }
  Natural n;
  n.value_.set_str(std::string(digits), 10);
  return n;
}

Natural Natural::from_mpz(mpz_class value) {
  if (sgn(value) < 0) {
    throw Error(ErrorCode::NegativeNatural, "negative value " + value.get_str() + " is not a natural");
  }
  Natural n;
  n.value_ = std::move(value);
  return n;
}

std::uint64_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::uint64_t Natural::trailing_zeros() const {
  if (is_zero()) {
    throw Error(ErrorCode::OutOfRange, "trailing zero count of 0 is undefined");
  }
  return mpz_scan1(value_.get_mpz_t(), 0);
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) {
    throw Error(ErrorCode::OutOfRange, to_string() + " does not fit in 64 bits");
  }
  return mpz_get_ui(value_.get_mpz_t());
}

Natural Natural::isqrt() const {
  Natural r;
  mpz_sqrt(r.value_.get_mpz_t(), value_.get_mpz_t());
  return r;
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) {
    throw Error(ErrorCode::NegativeNatural, to_string() + " - " + rhs.to_string() + " is negative");
  }
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural operator<<(const Natural& lhs, std::uint64_t bits) {
  Natural r;
  mpz_mul_2exp(r.value_.get_mpz_t(), lhs.value_.get_mpz_t(), bits);
  return r;
}

Natural operator>>(const Natural& lhs, std::uint64_t bits) {
  Natural r;
  mpz_fdiv_q_2exp(r.value_.get_mpz_t(), lhs.value_.get_mpz_t(), bits);
  return r;
}

// ---------------------------------------------------------------- Integer

Integer Integer::from_mpz(mpz_class value) {
  Integer i;
  i.value_ = std::move(value);
  return i;
}

Integer Integer::parse(std::string_view text) {
  const bool negative = !text.empty() && text.front() == '-';
  const Natural magnitude = Natural::parse(negative ? text.substr(1) : text);
  return negative ? -Integer(magnitude) : Integer(magnitude);
}

Natural Integer::magnitude() const { return Natural::from_mpz(abs(value_)); }

// ---------------------------------------------------------------- gcd / pow

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(g));
}

Natural pow(const Natural& base, const Natural& exp) {
  if (base.is_zero() && exp.is_zero()) {
    throw Error(ErrorCode::ZeroToZeroPower, "0^0 is undefined");
  }
  // Left-to-right binary exponentiation over the bits of exp.
  Natural result = 1;
  for (std::uint64_t bit = exp.bit_length(); bit-- > 0;) {
    result *= result;
    if (mpz_tstbit(exp.mpz().get_mpz_t(), bit) != 0) result *= base;
  }
  return result;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& numerator, const Natural& denominator) {
  if (denominator.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  const Natural g = gcd(numerator.magnitude(), denominator);
  mpz_class n = numerator.mpz();
  mpz_class d = denominator.mpz();
  mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.mpz().get_mpz_t());
  mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.mpz().get_mpz_t());
  num_ = Integer::from_mpz(std::move(n));
  den_ = Natural::from_mpz(std::move(d));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text), Natural(1));
  return Rational(Integer::parse(text.substr(0, slash)), Natural::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const { return num_.to_string() + "/" + den_.to_string(); }

Rational Rational::operator-() const { return Rational(Reduced{}, -num_, den_); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  const Integer n = num_.sign() < 0 ? -Integer(den_) : Integer(den_);
  return Rational(Reduced{}, n, num_.magnitude());
}

// Sum and product follow the classical reduced-operand algorithms: the gcds
// are taken on the smaller cofactors, and the result comes out in lowest
// terms without a final full-size gcd.
Rational rat_add(const Rational& a, const Rational& b) {
  const mpz_class& an = a.num_.mpz();
  const mpz_class& ad = a.den_.mpz();
  const mpz_class& bn = b.num_.mpz();
  const mpz_class& bd = b.den_.mpz();

  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ad.get_mpz_t(), bd.get_mpz_t());
  if (g == 1) {
    return Rational(Rational::Reduced{}, Integer::from_mpz(an * bd + bn * ad), Natural::from_mpz(ad * bd));
  }
  mpz_class ad_g, bd_g;
  mpz_divexact(ad_g.get_mpz_t(), ad.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(bd_g.get_mpz_t(), bd.get_mpz_t(), g.get_mpz_t());
  mpz_class t = an * bd_g + bn * ad_g;
  mpz_class g2;
  mpz_gcd(g2.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
  if (g2 != 1) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), g2.get_mpz_t());
    mpz_divexact(bd_g.get_mpz_t(), bd.get_mpz_t(), g2.get_mpz_t());
  } else {
    bd_g = bd;
  }
  mpz_class den = ad_g * bd_g;
  if (sgn(t) == 0) den = 1;
  return Rational(Rational::Reduced{}, Integer::from_mpz(std::move(t)), Natural::from_mpz(std::move(den)));
}

Rational rat_sub(const Rational& a, const Rational& b) { return rat_add(a, -b); }

Rational rat_mul(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  const Natural g1 = gcd(a.num_.magnitude(), b.den_);
  const Natural g2 = gcd(b.num_.magnitude(), a.den_);
  mpz_class num = a.num_.mpz();
  mpz_class num2 = b.num_.mpz();
  mpz_class den = a.den_.mpz();
  mpz_class den2 = b.den_.mpz();
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g1.mpz().get_mpz_t());
  mpz_divexact(den2.get_mpz_t(), den2.get_mpz_t(), g1.mpz().get_mpz_t());
  mpz_divexact(num2.get_mpz_t(), num2.get_mpz_t(), g2.mpz().get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g2.mpz().get_mpz_t());
  return Rational(Rational::Reduced{}, Integer::from_mpz(num * num2), Natural::from_mpz(den * den2));
}

Rational rat_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  return rat_mul(a, b.reciprocal());
}

std::strong_ordering rat_cmp(const Rational& a, const Rational& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.denominator() == b.denominator()) return a.numerator() <=> b.numerator();
  return a.numerator() * Integer(b.denominator()) <=> b.numerator() * Integer(a.denominator());
}

}  // namespace perfect
