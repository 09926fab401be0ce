#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "perfect/cli.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Natural <-> Python int, through the decimal string.
template <>
struct type_caster<perfect::Natural> {
  PYBIND11_TYPE_CASTER(perfect::Natural, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr()) || PyBool_Check(src.ptr())) return false;
    const std::string digits = py::str(src).cast<std::string>();
    if (!digits.empty() && digits.front() == '-') {
      throw perfect::Error(perfect::ErrorCode::NegativeNatural, "negative value " + digits + " is not a natural");
    }
    value = perfect::Natural::parse(digits);
    return true;
  }

  static handle cast(const perfect::Natural& n, return_value_policy, handle) {
    return PyLong_FromString(n.to_string().c_str(), nullptr, 10);
  }
};

// Rational -> fractions.Fraction.
template <>
struct type_caster<perfect::Rational> {
  PYBIND11_TYPE_CASTER(perfect::Rational, const_name("fractions.Fraction"));

  bool load(handle, bool) { return false; }

  static handle cast(const perfect::Rational& r, return_value_policy, handle) {
    // Leaked on purpose: must outlive interpreter finalization.
    static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(r.to_string()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace perfect;

py::object json_to_python(const cli::Json& doc) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(doc.dump());
}

py::dict form_dict(const EvenPerfectForm& f) {
  return py::dict(py::arg("form") = "even", py::arg("n") = f.n, py::arg("k") = f.k, py::arg("mersenne") = f.mersenne);
}

py::dict form_dict(const OddDecomposition& d) {
  return py::dict(py::arg("form") = "odd", py::arg("n") = d.value(), py::arg("p") = d.p, py::arg("i") = d.i,
                  py::arg("m") = d.m);
}

ScanStrategy strategy_from(const std::string& name) {
  const auto s = cli::parse_strategy(name);
  if (!s) throw Error(ErrorCode::ParseError, "unknown strategy '" + name + "'");
  return *s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact divisor sums, perfect-number structure and reciprocal-sum bounds.";

  static auto* perfect_error = new py::exception<Error>(m, "PerfectError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::handle(perfect_error->ptr())(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(perfect_error->ptr(), instance.ptr());
    }
  });

  m.def("sigma", [](const Natural& n) { return sigma_fast(n); }, py::arg("n"));
  m.def("sigma_naive", &sigma_naive, py::arg("n"));
  m.def("divisors", &divisors, py::arg("n"));
  m.def("is_perfect", &is_perfect, py::arg("n"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("lucas_lehmer", &lucas_lehmer, py::arg("k"));
  m.def(
      "factor",
      [](const Natural& n) {
        std::vector<std::pair<Natural, std::uint64_t>> out;
        for (const auto& [p, e] : prime_power_factors(n)) out.emplace_back(p, e);
        return out;
      },
      py::arg("n"));
  m.def(
      "perfect_up_to",
      [](const Natural& limit, const std::string& strategy) { return perfect_up_to(limit, strategy_from(strategy)); },
      py::arg("limit"), py::arg("strategy") = "auto");
  m.def("euclid_perfect", [](std::uint64_t k) { return form_dict(euclid_perfect(k)); }, py::arg("k"));
  m.def(
      "decompose",
      [](const Natural& n) -> py::dict {
        if (n.is_zero()) throw Error(ErrorCode::FactorOfZero, "0 has no decomposition");
        return n.is_even() ? form_dict(euler_decompose_even(n)) : form_dict(euler_decompose_odd(n));
      },
      py::arg("n"));
  m.def("geometric_partial", &geometric_partial, py::arg("n"));
  m.def("basel_partial", &basel_partial, py::arg("n"));
  m.def(
      "reciprocal_sum",
      [](const Natural& cutoff) {
        const PartialSum s = perfect_reciprocal_sum(cutoff);
        std::vector<Natural> terms;
        for (const auto& t : s.terms) terms.push_back(t.n);
        return py::dict(py::arg("cutoff") = s.cutoff, py::arg("total") = s.total, py::arg("even_part") = s.even_part,
                        py::arg("odd_part") = s.odd_part, py::arg("terms") = terms);
      },
      py::arg("cutoff"));
  m.def(
      "certify_bound", [](const Natural& cutoff) { return json_to_python(cli::to_json(certify_bound(cutoff))); },
      py::arg("cutoff"), "Bound certificate as a JSON-shaped dict; all numbers are decimal strings.");
  m.def(
      "validate_certificate",
      [](const std::string& document) -> std::optional<std::string> {
        return cli::certificate_from_json(cli::Json::parse(document)).validate();
      },
      py::arg("document"), "None when the JSON certificate holds, else the first failing check.");
}
