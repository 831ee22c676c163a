#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lowrank/classify.hpp"
#include "lowrank/cli.hpp"
#include "lowrank/cubic.hpp"
#include "lowrank/json_io.hpp"

namespace py = pybind11;
using namespace lowrank;

namespace {

py::tuple run_cli(const std::vector<std::string>& args, const std::string& stdin_text) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(args, in, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

CubicCoefficients coefficients(const std::string& doc) {
  return json_io::coefficients_from_json(json_io::Json::parse(doc));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact free algebras of rank 2 and 3";

  m.def("run", &run_cli, py::arg("args"), py::arg("stdin") = "",
        "Run a CLI command; returns (exit_code, stdout, stderr).");

  m.def(
      "validate_relations",
      [](const std::string& doc) {
        RelationReport r = validate_relations(coefficients(doc));
        return py::make_tuple(r.valid, r.violated);
      },
      py::arg("coefficients_json"));

  m.def(
      "classify_case", [](const std::string& doc) { return to_string(classify_case(coefficients(doc))); },
      py::arg("coefficients_json"));

  m.def(
      "census",
      [](std::uint64_t p) {
        if (!is_prime(p)) throw py::value_error(std::to_string(p) + " is not prime");
        std::string out;
        {
          py::gil_scoped_release release;
          out = json_io::to_json(verify_main_theorem(RingSpec::prime_field(p))).dump();
        }
        return out;
      },
      py::arg("p"));

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
}
