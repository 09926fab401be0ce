// perfect: command-line front end for the exact sigma / perfect-number
// library. Human-readable output by default, one JSON document with --json.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "perfect/cli.hpp"

namespace {

using perfect::Natural;
namespace cli = perfect::cli;

const auto kNatural = CLI::Validator(
    [](const std::string& text) -> std::string {
      try {
        (void)Natural::parse(text);
        return {};
      } catch (const perfect::Error& e) {
        return e.what();
      }
    },
    "NATURAL", "nonnegative decimal integer");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor sums, perfect numbers and the reciprocal-sum bound"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Emit one structured JSON document");

  std::string sigma_n;
  auto* sigma = app.add_subcommand("sigma", "Sum of divisors of N");
  sigma->add_option("n,--n", sigma_n, "N")->required()->check(kNatural);

  std::string factor_n;
  auto* factor = app.add_subcommand("factor", "Prime-power factorization of N");
  factor->add_option("n,--n", factor_n, "N")->required()->check(kNatural);

  std::string scan_limit;
  std::string strategy_name = "auto";
  auto* scan = app.add_subcommand("perfect-scan", "All perfect numbers up to LIMIT");
  scan->add_option("limit,--limit", scan_limit, "LIMIT")->required()->check(kNatural);
  scan->add_option("--strategy", strategy_name, "auto, table, segmented, euclid-odd or cross-checked")
      ->check(CLI::IsMember({"auto", "table", "segmented", "euclid-odd", "cross-checked"}));

  std::string decompose_n;
  auto* decompose = app.add_subcommand("decompose", "Even: 2^(k-1)(2^k - 1). Odd: p^i m^2");
  decompose->add_option("n,--n", decompose_n, "N")->required()->check(kNatural);

  std::string max_k;
  auto* mersenne = app.add_subcommand("mersenne", "Lucas-Lehmer sweep over k = 2..MAX_K");
  mersenne->add_option("max_k,--max-k", max_k, "MAX_K")->required()->check(kNatural);

  std::string cutoff;
  bool certify = false;
  auto* series = app.add_subcommand("series", "Exact sum of 1/n over perfect n <= CUTOFF");
  series->add_option("cutoff,--cutoff", cutoff, "CUTOFF")->required()->check(kNatural);
  series->add_flag("--certify", certify, "Attach the bound certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  cli::Envelope envelope;
  if (sigma->parsed()) {
    envelope = cli::cmd_sigma(Natural::parse(sigma_n));
  } else if (factor->parsed()) {
    envelope = cli::cmd_factor(Natural::parse(factor_n));
  } else if (scan->parsed()) {
    envelope = cli::cmd_perfect_scan(Natural::parse(scan_limit), *cli::parse_strategy(strategy_name));
  } else if (decompose->parsed()) {
    envelope = cli::cmd_decompose(Natural::parse(decompose_n));
  } else if (mersenne->parsed()) {
    envelope = cli::cmd_mersenne(Natural::parse(max_k));
  } else {
    envelope = cli::cmd_series(Natural::parse(cutoff), certify);
  }

  if (json) {
    std::cout << cli::render_json(envelope);
  } else if (envelope.error) {
    std::cerr << cli::render_text(envelope);
  } else {
    std::cout << cli::render_text(envelope);
  }
  return envelope.exit_code();
}
