#pragma once

// Exact partial sums of 1/n over perfect n, split into even and odd
// branches, plus a checkable certificate that every partial sum stays
// below 4.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "perfect/numkernel.hpp"
#include "perfect/structure.hpp"

namespace perfect {

/// Running sums of 1/2^i for i = 0..index. Every advance re-checks the
/// closed form 2 - 1/2^index and throws IdentityViolation if it fails.
class GeometricPartialSums {
 public:
  GeometricPartialSums();

  std::uint64_t index() const { return index_; }
  const Rational& sum() const { return sum_; }
  void advance();

  /// 2 - 1/2^index.
  static Rational closed_form(std::uint64_t index);

 private:
  std::uint64_t index_ = 0;
  Rational sum_;
  Rational term_;
};

/// Running sums of 1/m^2 for m = 1..index, each checked against
/// 2 - 1/index (BoundViolation on failure).
class BaselPartialSums {
 public:
  BaselPartialSums();

  std::uint64_t index() const { return index_; }
  const Rational& sum() const { return sum_; }
  void advance();

  /// 2 - 1/index; index must be positive.
  static Rational bound(std::uint64_t index);

 private:
  std::uint64_t index_ = 1;
  Rational sum_;
};

/// sum_{i=0}^{n} 1/2^i, verified equal to 2 - 1/2^n.
Rational geometric_partial(std::uint64_t n);

/// sum_{m=1}^{n} 1/m^2, verified to be at most 2 - 1/n. n = 0 throws
/// OutOfRange.
Rational basel_partial(std::uint64_t n);

/// Records m -> n for odd perfect terms p^i m^2 and rejects a second,
/// different n with the same m. Check-and-insert is atomic.
class HornfeckLedger {
 public:
  /// Throws HornfeckViolation when m is already bound to another n.
  void record(const Natural& m, const Natural& n);
  std::optional<Natural> lookup(const Natural& m) const;
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<Natural, Natural> entries_;
};

struct SeriesTerm {
  Natural n;
  Rational reciprocal;
  std::variant<EvenPerfectForm, OddDecomposition> form;

  bool is_even() const { return std::holds_alternative<EvenPerfectForm>(form); }
};

struct PartialSum {
  Natural cutoff;
  Rational total;
  Rational even_part;
  Rational odd_part;
  std::vector<SeriesTerm> terms;
};

/// Sum of 1/k over perfect k <= cutoff. Odd terms pass through the Hornfeck
/// ledger. cutoff = 0 throws SieveLimit.
PartialSum perfect_reciprocal_sum(const Natural& cutoff);
PartialSum perfect_reciprocal_sum(const Natural& cutoff, HornfeckLedger& ledger);

/// Assembles a PartialSum from numbers the caller already knows to be
/// perfect (ascending, each <= cutoff). Even entries go through
/// euler_decompose_even, odd entries through euler_decompose_odd and the
/// ledger; perfection of odd entries is taken on trust.
PartialSum sum_reciprocals(std::span<const Natural> perfect_numbers, const Natural& cutoff,
                           HornfeckLedger& ledger);

enum class Relation { Le, Lt };

/// "le" or "lt".
std::string_view to_string(Relation r);

struct BoundStep {
  std::string label;
  Rational lhs;
  Relation relation;
  Rational rhs;
};

/// Trace of the inequality chain
///   0 <= even_part <= sum 1/2^i (found i) <= sum_{i<=I} 1/2^i <= 2 - 1/2^I < 2
///   0 <= odd_part  <= sum 1/m^2 (found m) <= sum_{m<=M} 1/m^2 <= 2 - 1/M < 2
///   total = even_part + odd_part < 4
/// with I = floor(log2 cutoff) and M = floor(sqrt cutoff), the largest
/// indices any perfect k <= cutoff can contribute.
struct BoundCertificate {
  static constexpr int kVersion = 1;

  Natural cutoff;
  std::uint64_t geometric_index = 0;
  std::uint64_t basel_index = 0;
  std::vector<BoundStep> even_steps;
  std::vector<BoundStep> odd_steps;
  Rational even_part;
  Rational odd_part;
  Rational total;
  Rational bound;  // 4

  /// Every step's relation via rat_cmp, each branch chain links lhs to rhs,
  /// and the conclusion follows. Returns the first failure, if any.
  std::optional<std::string> validate() const;
};

/// Builds and validates the certificate; CertificateFailure if any
/// relation does not hold.
BoundCertificate certify_bound(const Natural& cutoff);
BoundCertificate certify_bound(const PartialSum& sum);

struct MonotoneReport {
  std::vector<std::pair<Natural, Rational>> rows;
};

/// Totals at strictly ascending cutoffs; throws BoundViolation unless they
/// are nondecreasing and all below 4.
MonotoneReport monotone_bounded_report(std::span<const Natural> cutoffs);

}  // namespace perfect
