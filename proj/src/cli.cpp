#include "perfect/cli.hpp"

#include <sstream>

namespace perfect::cli {

namespace {

Json strings(const std::vector<Natural>& values) {
  Json out = Json::array();
  for (const Natural& v : values) out.push_back(v.to_string());
  return out;
}

Json step_json(const BoundStep& s) {
  return Json{{"label", s.label},
              {"lhs", s.lhs.to_string()},
              {"relation", std::string(to_string(s.relation))},
              {"rhs", s.rhs.to_string()}};
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("certificate document lacks '") + key + "'");
  }
  return doc.at(key);
}

std::string string_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("certificate field '") + key + "' is not a string");
  return v.get<std::string>();
}

// Runs one command body and folds library errors into the envelope.
template <class Body>
Envelope run(std::string command, Json input, Body&& body) {
  Envelope env;
  env.command = std::move(command);
  env.input = std::move(input);
  try {
    env.result = body();
  } catch (const Error& e) {
    env.result = nullptr;
    env.error = EnvelopeError{std::string(to_string(e.code())), e.what()};
  }
  return env;
}

void render_text_value(std::ostringstream& os, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render_text_value(os, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << key << ":\n";
      for (const Json& item : v) {
        os << pad << "  -\n";
        render_text_value(os, item, indent + 2);
      }
    } else if (v.is_array()) {
      os << pad << key << ": [";
      for (std::size_t j = 0; j < v.size(); ++j) os << (j ? ", " : "") << (v[j].is_string() ? v[j].get<std::string>() : v[j].dump());
      os << "]\n";
    } else {
      os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

// ---------------------------------------------------------------- renderings

Json to_json(const PrimePowerFactorization& f) {
  Json out = Json::array();
  for (const auto& [p, e] : f) out.push_back(Json{{"prime", p.to_string()}, {"exponent", std::to_string(e)}});
  return out;
}

Json to_json(const EvenPerfectForm& form) {
  return Json{{"form", "even"},
              {"n", form.n.to_string()},
              {"k", std::to_string(form.k)},
              {"two_adic", std::to_string(form.two_adic())},
              {"mersenne", form.mersenne.to_string()}};
}

Json to_json(const OddDecomposition& d) {
  return Json{{"form", "odd"},
              {"n", d.value().to_string()},
              {"p", d.p.to_string()},
              {"i", std::to_string(d.i)},
              {"m", d.m.to_string()}};
}

Json to_json(const PartialSum& sum) {
  Json terms = Json::array();
  for (const SeriesTerm& t : sum.terms) {
    Json form = std::visit([](const auto& f) { return to_json(f); }, t.form);
    terms.push_back(Json{{"n", t.n.to_string()}, {"reciprocal", t.reciprocal.to_string()}, {"form", form}});
  }
  return Json{{"cutoff", sum.cutoff.to_string()},
              {"total", sum.total.to_string()},
              {"even_part", sum.even_part.to_string()},
              {"odd_part", sum.odd_part.to_string()},
              {"terms", terms}};
}

Json to_json(const BoundCertificate& cert) {
  Json steps = Json::array();
  for (const BoundStep& s : cert.even_steps) steps.push_back(step_json(s));
  for (const BoundStep& s : cert.odd_steps) steps.push_back(step_json(s));
  return Json{{"version", std::to_string(BoundCertificate::kVersion)},
              {"cutoff", cert.cutoff.to_string()},
              {"geometric_index", std::to_string(cert.geometric_index)},
              {"basel_index", std::to_string(cert.basel_index)},
              {"steps", steps},
              {"conclusion",
               Json{{"even_part", cert.even_part.to_string()},
                    {"odd_part", cert.odd_part.to_string()},
                    {"total", cert.total.to_string()},
                    {"relation", "lt"},
                    {"bound", cert.bound.to_string()}}}};
}

Json to_json(const Envelope& envelope) {
  Json error = nullptr;
  if (envelope.error) error = Json{{"code", envelope.error->code}, {"message", envelope.error->message}};
  return Json{{"command", envelope.command},
              {"input", envelope.input},
              {"result", envelope.result},
              {"exact", true},
              {"error", error}};
}

BoundCertificate certificate_from_json(const Json& doc) {
  if (string_field(doc, "version") != std::to_string(BoundCertificate::kVersion)) {
    throw Error(ErrorCode::ParseError, "unsupported certificate version");
  }
  BoundCertificate cert;
  cert.cutoff = Natural::parse(string_field(doc, "cutoff"));
  cert.geometric_index = Natural::parse(string_field(doc, "geometric_index")).to_u64();
  cert.basel_index = Natural::parse(string_field(doc, "basel_index")).to_u64();
  const Json& steps = field(doc, "steps");
  if (!steps.is_array()) throw Error(ErrorCode::ParseError, "certificate steps must be an array");
  for (const Json& s : steps) {
    const std::string relation = string_field(s, "relation");
    if (relation != "le" && relation != "lt") throw Error(ErrorCode::ParseError, "unknown relation '" + relation + "'");
    BoundStep step{string_field(s, "label"), Rational::parse(string_field(s, "lhs")),
                   relation == "lt" ? Relation::Lt : Relation::Le, Rational::parse(string_field(s, "rhs"))};
    if (step.label.starts_with("even.")) {
      cert.even_steps.push_back(std::move(step));
    } else if (step.label.starts_with("odd.")) {
      cert.odd_steps.push_back(std::move(step));
    } else {
      throw Error(ErrorCode::ParseError, "step label '" + step.label + "' names no branch");
    }
  }
  const Json& conclusion = field(doc, "conclusion");
  if (string_field(conclusion, "relation") != "lt") throw Error(ErrorCode::ParseError, "conclusion must be strict");
  cert.even_part = Rational::parse(string_field(conclusion, "even_part"));
  cert.odd_part = Rational::parse(string_field(conclusion, "odd_part"));
  cert.total = Rational::parse(string_field(conclusion, "total"));
  cert.bound = Rational::parse(string_field(conclusion, "bound"));
  return cert;
}

std::string render_json(const Envelope& envelope) { return to_json(envelope).dump(2) + "\n"; }

std::string rerender(const std::string& document) { return Json::parse(document).dump(2) + "\n"; }

std::string render_text(const Envelope& envelope) {
  std::ostringstream os;
  if (envelope.error) {
    os << "error [" << envelope.error->code << "]: " << envelope.error->message << "\n";
    return os.str();
  }
  render_text_value(os, envelope.result, 0);
  return os.str();
}

std::optional<ScanStrategy> parse_strategy(std::string_view name) {
  for (const auto s : {ScanStrategy::Automatic, ScanStrategy::Table, ScanStrategy::Segmented,
                       ScanStrategy::EuclidOdd, ScanStrategy::CrossChecked}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(ScanStrategy strategy) {
  switch (strategy) {
    case ScanStrategy::Automatic: return "auto";
    case ScanStrategy::Table: return "table";
    case ScanStrategy::Segmented: return "segmented";
    case ScanStrategy::EuclidOdd: return "euclid-odd";
    case ScanStrategy::CrossChecked: return "cross-checked";
  }
  return "auto";
}

// ---------------------------------------------------------------- commands

Envelope cmd_sigma(const Natural& n) {
  return run("sigma", Json{{"n", n.to_string()}}, [&] {
    const Natural s = sigma_fast(n);
    return Json{{"n", n.to_string()},
                {"sigma", s.to_string()},
                {"aliquot", (s - n).to_string()},
                {"perfect", s == n * 2}};
  });
}

Envelope cmd_factor(const Natural& n) {
  return run("factor", Json{{"n", n.to_string()}}, [&] {
    const PrimePowerFactorization f = prime_power_factors(n);
    return Json{{"n", n.to_string()},
                {"factors", to_json(f)},
                {"prime", f.size() == 1 && f.pairs().front().exponent == 1}};
  });
}

Envelope cmd_perfect_scan(const Natural& limit, ScanStrategy strategy) {
  return run("perfect-scan", Json{{"limit", limit.to_string()}, {"strategy", std::string(to_string(strategy))}}, [&] {
    return Json{{"limit", limit.to_string()}, {"perfect", strings(perfect_up_to(limit, strategy))}};
  });
}

Envelope cmd_decompose(const Natural& n) {
  return run("decompose", Json{{"n", n.to_string()}}, [&]() -> Json {
    if (n.is_zero()) throw Error(ErrorCode::FactorOfZero, "cannot decompose 0");
    if (n.is_even()) return to_json(euler_decompose_even(n));
    return to_json(euler_decompose_odd(n));
  });
}

Envelope cmd_mersenne(const Natural& max_k) {
  return run("mersenne", Json{{"max_k", max_k.to_string()}}, [&] {
    if (max_k < 2) throw Error(ErrorCode::LucasLehmerExponent, "max_k must be at least 2");
    const std::uint64_t top = max_k.to_u64();
    Json exponents = Json::array();
    Json primes = Json::array();
    for (std::uint64_t k = 2; k <= top; ++k) {
      if (!lucas_lehmer(Natural(k))) continue;
      exponents.push_back(std::to_string(k));
      primes.push_back(((Natural(1) << k) - 1).to_string());
    }
    return Json{{"max_k", max_k.to_string()}, {"exponents", exponents}, {"mersenne_primes", primes}};
  });
}

Envelope cmd_series(const Natural& cutoff, bool certify) {
  return run("series", Json{{"cutoff", cutoff.to_string()}, {"certify", certify}}, [&] {
    const PartialSum sum = perfect_reciprocal_sum(cutoff);
    Json out = to_json(sum);
    if (certify) out["certificate"] = to_json(certify_bound(sum));
    return out;
  });
}

}  // namespace perfect::cli
