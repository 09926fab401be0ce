#include "perfect/series.hpp"

#include <set>

#include "perfect/sigma.hpp"

namespace perfect {

namespace {

Rational unit_fraction(const Natural& denominator) { return Rational(Integer(1), denominator); }

[[noreturn]] void certificate_failure(const std::string& what) {
  throw Error(ErrorCode::CertificateFailure, "bound certificate: " + what);
}

bool holds(const Rational& lhs, Relation r, const Rational& rhs) {
  const auto c = rat_cmp(lhs, rhs);
  return r == Relation::Lt ? c == std::strong_ordering::less : c != std::strong_ordering::greater;
}

std::optional<std::string> validate_chain(const std::vector<BoundStep>& steps, const Rational& part,
                                          const char* branch) {
  const std::string name(branch);
  if (steps.size() < 2) return name + " chain is too short";
  bool strict = false;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    const BoundStep& s = steps[j];
    if (!holds(s.lhs, s.relation, s.rhs)) {
      return "step " + s.label + " fails: " + s.lhs.to_string() + " " + std::string(to_string(s.relation)) +
             " " + s.rhs.to_string();
    }
    if (j + 1 < steps.size() && !(s.rhs == steps[j + 1].lhs)) {
      return "step " + s.label + " does not link to " + steps[j + 1].label;
    }
    strict = strict || s.relation == Relation::Lt;
  }
  if (!steps.front().lhs.is_zero()) return name + " chain does not start at 0";
  if (!(steps.front().rhs == part)) return name + " chain does not pass through the branch sum";
  if (!(steps.back().rhs == Rational(2))) return name + " chain does not end at 2";
  if (!strict) return name + " chain has no strict step";
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- identities

GeometricPartialSums::GeometricPartialSums() : sum_(1), term_(1) {}

Rational GeometricPartialSums::closed_form(std::uint64_t index) {
  return Rational(2) - unit_fraction(Natural(1) << index);
}

void GeometricPartialSums::advance() {
  term_ = rat_mul(term_, Rational(Integer(1), Natural(2)));
  sum_ += term_;
  ++index_;
  if (!(sum_ == closed_form(index_))) {
    throw Error(ErrorCode::IdentityViolation, "sum of 1/2^i for i <= " + std::to_string(index_) +
                                                  " is " + sum_.to_string() + ", not 2 - 1/2^" +
                                                  std::to_string(index_));
  }
}

BaselPartialSums::BaselPartialSums() : sum_(1) {}

Rational BaselPartialSums::bound(std::uint64_t index) {
  if (index == 0) throw Error(ErrorCode::OutOfRange, "Basel bound needs index >= 1");
  return Rational(2) - unit_fraction(Natural(index));
}

void BaselPartialSums::advance() {
  ++index_;
  const Natural m(index_);
  sum_ += unit_fraction(m * m);
  if (rat_cmp(sum_, bound(index_)) == std::strong_ordering::greater) {
    throw Error(ErrorCode::BoundViolation, "sum of 1/m^2 for m <= " + std::to_string(index_) + " exceeds 2 - 1/" +
                                               std::to_string(index_));
  }
}

Rational geometric_partial(std::uint64_t n) {
  GeometricPartialSums sums;
  while (sums.index() < n) sums.advance();
  return sums.sum();
}

Rational basel_partial(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "basel_partial needs n >= 1");
  BaselPartialSums sums;
  while (sums.index() < n) sums.advance();
  return sums.sum();
}

// ---------------------------------------------------------------- ledger

void HornfeckLedger::record(const Natural& m, const Natural& n) {
  std::lock_guard lock(mutex_);
  const auto [it, inserted] = entries_.try_emplace(m, n);
  if (!inserted && it->second != n) {
    throw Error(ErrorCode::HornfeckViolation, "odd terms " + it->second.to_string() + " and " + n.to_string() +
                                                  " share m = " + m.to_string());
  }
}

std::optional<Natural> HornfeckLedger::lookup(const Natural& m) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(m);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t HornfeckLedger::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

// ---------------------------------------------------------------- partial sums

PartialSum sum_reciprocals(std::span<const Natural> perfect_numbers, const Natural& cutoff,
                           HornfeckLedger& ledger) {
  PartialSum out;
  out.cutoff = cutoff;
  for (std::size_t j = 0; j < perfect_numbers.size(); ++j) {
    const Natural& n = perfect_numbers[j];
    if (n.is_zero() || n > cutoff || (j > 0 && !(perfect_numbers[j - 1] < n))) {
      throw Error(ErrorCode::OutOfRange, "series terms must be ascending and within 1.." + cutoff.to_string());
    }
    SeriesTerm term{n, unit_fraction(n), EvenPerfectForm{}};
    if (n.is_even()) {
      term.form = euler_decompose_even(n);
      out.even_part += term.reciprocal;
    } else {
      const OddDecomposition d = euler_decompose_odd(n);
      ledger.record(d.m, n);
      term.form = d;
      out.odd_part += term.reciprocal;
    }
    out.terms.push_back(std::move(term));
  }
  out.total = out.even_part + out.odd_part;
  return out;
}

PartialSum perfect_reciprocal_sum(const Natural& cutoff, HornfeckLedger& ledger) {
  const std::vector<Natural> perfect = perfect_up_to(cutoff);
  return sum_reciprocals(perfect, cutoff, ledger);
}

PartialSum perfect_reciprocal_sum(const Natural& cutoff) {
  HornfeckLedger ledger;
  return perfect_reciprocal_sum(cutoff, ledger);
}

// ---------------------------------------------------------------- certificate

std::string_view to_string(Relation r) { return r == Relation::Lt ? "lt" : "le"; }

std::optional<std::string> BoundCertificate::validate() const {
  if (auto e = validate_chain(even_steps, even_part, "even")) return e;
  if (auto e = validate_chain(odd_steps, odd_part, "odd")) return e;
  if (!(total == even_part + odd_part)) return "total is not the sum of the branch sums";
  if (!(bound == Rational(4))) return "conclusion bound is not 4";
  if (rat_cmp(total, bound) != std::strong_ordering::less) return "total is not below 4";
  return std::nullopt;
}

BoundCertificate certify_bound(const PartialSum& sum) {
  if (sum.cutoff.is_zero()) certificate_failure("cutoff must be at least 1");
  BoundCertificate cert;
  cert.cutoff = sum.cutoff;
  cert.geometric_index = sum.cutoff.bit_length() - 1;
  cert.basel_index = sum.cutoff.isqrt().to_u64();
  cert.even_part = sum.even_part;
  cert.odd_part = sum.odd_part;
  cert.total = sum.total;
  cert.bound = Rational(4);

  Rational even_relaxed;
  Rational odd_relaxed;
  std::set<std::uint64_t> seen_i;
  std::set<Natural> seen_m;
  for (const SeriesTerm& term : sum.terms) {
    if (const auto* even = std::get_if<EvenPerfectForm>(&term.form)) {
      const std::uint64_t i = even->two_adic();
      if (i > cert.geometric_index || !seen_i.insert(i).second) {
        certificate_failure("even term " + term.n.to_string() + " has exponent outside the geometric range");
      }
      even_relaxed += unit_fraction(Natural(1) << i);
    } else {
      const auto& odd = std::get<OddDecomposition>(term.form);
      if (odd.m > cert.basel_index || !seen_m.insert(odd.m).second) {
        certificate_failure("odd term " + term.n.to_string() + " has m outside the Basel range");
      }
      odd_relaxed += unit_fraction(odd.m * odd.m);
    }
  }

  const Rational two(2);
  const Rational geometric = geometric_partial(cert.geometric_index);
  const Rational geometric_closed = GeometricPartialSums::closed_form(cert.geometric_index);
  cert.even_steps = {
      {"even.nonnegative", Rational(0), Relation::Le, sum.even_part},
      {"even.termwise", sum.even_part, Relation::Le, even_relaxed},
      {"even.sparse_to_full", even_relaxed, Relation::Le, geometric},
      {"even.geometric_identity", geometric, Relation::Le, geometric_closed},
      {"even.strict", geometric_closed, Relation::Lt, two},
  };

  const Rational basel = basel_partial(cert.basel_index);
  const Rational basel_bound = BaselPartialSums::bound(cert.basel_index);
  cert.odd_steps = {
      {"odd.nonnegative", Rational(0), Relation::Le, sum.odd_part},
      {"odd.termwise", sum.odd_part, Relation::Le, odd_relaxed},
      {"odd.sparse_to_full", odd_relaxed, Relation::Le, basel},
      {"odd.basel_bound", basel, Relation::Le, basel_bound},
      {"odd.strict", basel_bound, Relation::Lt, two},
  };

  if (auto failure = cert.validate()) certificate_failure(*failure);
  return cert;
}

BoundCertificate certify_bound(const Natural& cutoff) { return certify_bound(perfect_reciprocal_sum(cutoff)); }

// ---------------------------------------------------------------- report

MonotoneReport monotone_bounded_report(std::span<const Natural> cutoffs) {
  MonotoneReport report;
  const Rational four(4);
  for (std::size_t j = 0; j < cutoffs.size(); ++j) {
    if (j > 0 && !(cutoffs[j - 1] < cutoffs[j])) {
      throw Error(ErrorCode::CutoffsNotAscending, "cutoffs must be strictly ascending");
    }
    const PartialSum s = perfect_reciprocal_sum(cutoffs[j]);
    if (rat_cmp(s.total, four) != std::strong_ordering::less) {
      throw Error(ErrorCode::BoundViolation, "partial sum at " + cutoffs[j].to_string() + " is not below 4");
    }
    if (!report.rows.empty() && rat_cmp(s.total, report.rows.back().second) == std::strong_ordering::less) {
      throw Error(ErrorCode::BoundViolation, "partial sum decreased at " + cutoffs[j].to_string());
    }
    report.rows.emplace_back(cutoffs[j], s.total);
  }
  return report;
}

}  // namespace perfect
