#pragma once

// Command layer shared by the `perfect` executable and the Python module.
// Each command returns an Envelope; rendering and exit codes are decided
// here so the executable only parses arguments.

#include <optional>
#include <string>

#include <json.hpp>

#include "perfect/factorization.hpp"
#include "perfect/series.hpp"
#include "perfect/sigma.hpp"
#include "perfect/structure.hpp"

namespace perfect::cli {

using Json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

struct EnvelopeError {
  std::string code;
  std::string message;
};

struct Envelope {
  std::string command;
  Json input = Json::object();
  Json result;  // null on error
  std::optional<EnvelopeError> error;

  int exit_code() const { return error ? kExitDomain : kExitOk; }
};

// Structured renderings. Integers and rationals are always decimal strings.
Json to_json(const PrimePowerFactorization& f);
Json to_json(const EvenPerfectForm& form);
Json to_json(const OddDecomposition& d);
Json to_json(const PartialSum& sum);
Json to_json(const BoundCertificate& cert);
Json to_json(const Envelope& envelope);

/// Inverse of to_json(BoundCertificate); throws ParseError on malformed input.
BoundCertificate certificate_from_json(const Json& doc);

/// One canonical document: sorted keys, two-space indent, trailing newline.
std::string render_json(const Envelope& envelope);
/// Parses a rendered document and renders it again.
std::string rerender(const std::string& document);
std::string render_text(const Envelope& envelope);

std::optional<ScanStrategy> parse_strategy(std::string_view name);
std::string_view to_string(ScanStrategy strategy);

Envelope cmd_sigma(const Natural& n);
Envelope cmd_factor(const Natural& n);
Envelope cmd_perfect_scan(const Natural& limit, ScanStrategy strategy = ScanStrategy::Automatic);
/// Even n go through euler_decompose_even, odd n through euler_decompose_odd.
Envelope cmd_decompose(const Natural& n);
/// Lucas-Lehmer sweep over k = 2..max_k.
Envelope cmd_mersenne(const Natural& max_k);
Envelope cmd_series(const Natural& cutoff, bool certify);

}  // namespace perfect::cli
