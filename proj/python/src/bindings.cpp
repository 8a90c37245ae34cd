#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "trident/cli.hpp"
#include "trident/errors.hpp"
#include "trident/identity_suite.hpp"
#include "trident/partition_oracle.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/specializations.hpp"
#include "trident/zero_locus.hpp"

namespace py = pybind11;
using namespace trident;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

using Term = std::tuple<unsigned, unsigned, unsigned, unsigned, py::int_>;

std::vector<Term> terms(const MultiPoly& p) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    out.emplace_back(t.exps.e[0], t.exps.e[1], t.exps.e[2], t.exps.e[3], to_py(t.coeff));
  }
  return out;
}

std::vector<py::int_> coeffs(const UniPoly& p) {
  std::vector<py::int_> out;
  for (const auto& c : p.coeffs()) out.push_back(to_py(c));
  return out;
}

SpecId spec_arg(const std::string& name) {
  auto s = parse_spec(name);
  if (!s) throw py::value_error("unknown spec '" + name + "'");
  return *s;
}

Family family_arg(const std::string& f) {
  if (f == "q" || f == "Q") return Family::Q;
  if (f == "r" || f == "R") return Family::R;
  throw py::value_error("family must be 'q' or 'r'");
}

}  // namespace

PYBIND11_MODULE(_trident, m) {
  m.doc() = "Restricted colored base-3 partition polynomials";

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_OverflowError);
  py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);

  m.def("s_poly", [](std::uint64_t n) { return terms(s_poly(n)); }, py::arg("n"),
        "Terms (a, b, c, d, coeff) of S(n) in graded-lex order.");
  m.def("s_poly_str", [](std::uint64_t n) { return s_poly(n).to_string(); }, py::arg("n"));
  m.def("q_poly", [](unsigned n) { return terms(q_poly(n)); }, py::arg("n"));
  m.def("r_poly", [](unsigned n) { return terms(r_poly(n)); }, py::arg("n"));
  m.def("count_partitions", [](std::uint64_t n) { return to_py(count_partitions(n)); }, py::arg("n"));
  m.def(
      "enumerate_partitions",
      [](std::uint64_t n, std::uint64_t cap) {
        std::vector<std::string> out;
        for (const auto& p : enumerate_partitions(n, OracleOptions{cap})) out.push_back(p.render());
        return out;
      },
      py::arg("n"), py::arg("cap") = 10000);
  m.def(
      "scalar_qr",
      [](unsigned n) {
        const auto qr = scalar_qr(n);
        return py::make_tuple(to_py(qr.q), to_py(qr.r));
      },
      py::arg("n"));
  m.def(
      "spec_poly",
      [](const std::string& spec, const std::string& family, unsigned n) {
        return coeffs(spec_family(spec_arg(spec), family_arg(family), n));
      },
      py::arg("spec"), py::arg("family"), py::arg("n"),
      "Ascending coefficients of the specialized Q_n or R_n.");
  m.def(
      "profile",
      [](const std::string& spec, const std::string& family, unsigned n, bool from_oracle) {
        const auto s = spec_arg(spec);
        const auto f = family_arg(family);
        const auto p = from_oracle ? profile_from_oracle(s, f, n) : profile(s, f, n);
        py::dict out;
        for (const auto& [k, c] : p.coeffs) out[py::int_(k)] = to_py(c);
        return out;
      },
      py::arg("spec"), py::arg("family"), py::arg("n"), py::arg("from_oracle") = false);
  m.def(
      "zeros",
      [](const std::string& spec, const std::string& family, unsigned n) {
        const auto s = spec_arg(spec);
        const auto f = family_arg(family);
        ZeroReport rep;
        if (s == SpecId::Z1) {
          rep = zeros_explicit(f == Family::Q ? ExplicitFamily::Z1Q : ExplicitFamily::Z1R, n);
        } else if (f == Family::Q && s == SpecId::Z2) {
          rep = zeros_explicit(ExplicitFamily::Z2, n);
        } else if (f == Family::Q && s == SpecId::Z3) {
          rep = zeros_explicit(ExplicitFamily::Z3, n);
        } else {
          rep = zeros_general(spec_family(s, f, n));
        }
        return rep.points;
      },
      py::arg("spec"), py::arg("family"), py::arg("n"));
  m.def(
      "verify_locus",
      [](const std::string& spec, unsigned n, double tol) {
        const auto rep = verify_locus(spec_arg(spec), n, tol);
        py::dict out;
        out["passed"] = rep.passed();
        out["worst_locus_distance"] = rep.worst_locus_distance;
        out["worst_relative_residual"] = rep.worst_relative_residual;
        out["path_agreement"] = rep.path_agreement ? py::cast(*rep.path_agreement) : py::none();
        out["strict_margin"] = rep.strict_margin ? py::cast(*rep.strict_margin) : py::none();
        out["failures"] = rep.failures;
        return out;
      },
      py::arg("spec"), py::arg("n"), py::arg("tol") = 1e-9);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "trident");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit code, stdout, stderr).");
}
