#include "coalg/cli.hpp"
#include "coalg/constructions.hpp"
#include "coalg/coradical.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coalg;

namespace {

using CheckList = std::vector<std::tuple<std::string, bool, std::string>>;

CheckList checks(const Report& r) {
  CheckList out;
  for (const auto& c : r.checks) out.emplace_back(c.name, c.passed, c.witness);
  return out;
}

Field field_for(std::uint64_t characteristic) {
  return characteristic == 0 ? Field() : Field::prime(characteristic);
}

std::string pointed_verdict(const Coalgebra& c) {
  switch (is_pointed(c).verdict) {
    case PointedVerdict::pointed: return "pointed";
    case PointedVerdict::not_pointed: return "not pointed";
    case PointedVerdict::not_split: return "coradical does not split over the field";
  }
  return "";
}

}  // namespace

PYBIND11_MODULE(_coalg, m) {
  m.doc() = "Exact coalgebra computations over Q and GF(p).";

  py::register_exception<cli::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedCharacteristic>(m, "UnsupportedCharacteristic", PyExc_ValueError);

  py::class_<Coalgebra>(m, "Coalgebra")
      .def_readonly("names", &Coalgebra::names)
      .def_property_readonly("dim", &Coalgebra::dim)
      .def_property_readonly("field", [](const Coalgebra& c) { return c.field.name(); })
      .def("constants",
           [](const Coalgebra& c) {
             std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
             for (const auto& [i, a, b, v] : c.constants())
               out.emplace_back(c.names[i], c.names[a], c.names[b], v.to_string());
             return out;
           },
           "Comultiplication terms (x, left, right, coefficient).")
      .def("check", [](const Coalgebra& c) { return checks(check_coalgebra(c)); })
      .def("coradical",
           [](const Coalgebra& c) {
             std::vector<std::string> out;
             Subspace s = coradical(c);
             for (const auto& b : s.basis()) out.push_back(c.format(b));
             return out;
           })
      .def("pointed", &pointed_verdict);

  py::class_<SimplyColored>(m, "Colored")
      .def_readonly("coalgebra", &SimplyColored::coalgebra)
      .def_readonly("colors", &SimplyColored::color_names)
      .def_property_readonly("dim", &SimplyColored::dim)
      .def("check", [](const SimplyColored& sc) { return checks(validate_colored(sc)); })
      .def("reduced_coassociative", &check_reduced_coassoc)
      .def("conilpotency",
           [](const SimplyColored& sc) {
             // index of each coideal basis vector, None when never killed
             Conilpotency cn = conilpotency(sc);
             std::vector<std::pair<std::string, std::optional<unsigned>>> out;
             for (std::size_t i = 0; i < cn.basis.size(); ++i)
               out.emplace_back(sc.coalgebra.format(cn.basis[i]),
                                cn.index[i] ? std::optional<unsigned>(cn.index[i]) : std::nullopt);
             return out;
           });

  py::class_<cli::Definition>(m, "Definition")
      .def_readonly("description", &cli::Definition::description)
      .def_property_readonly("field", [](const cli::Definition& d) { return d.field.name(); })
      .def_readonly("coalgebra", &cli::Definition::coalgebra)
      .def_readonly("colored", &cli::Definition::colored)
      .def("to_json", &cli::emit_definition);

  m.def("parse", &cli::parse_definition, py::arg("text"), py::arg("source") = "<input>");
  m.def("load", &cli::load_definition, py::arg("path"));

  m.def(
      "path_coalgebra",
      [](std::vector<std::string> vertices, const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
         unsigned max_length, std::uint64_t characteristic) {
        Quiver q{std::move(vertices), {}};
        for (const auto& [n, s, t] : arrows) q.arrows.push_back({n, s, t});
        return path_coalgebra(q, max_length, field_for(characteristic));
      },
      py::arg("vertices"), py::arg("arrows"), py::arg("max_length"), py::arg("characteristic") = 0);

  m.def(
      "matrix_coalgebra", [](Index n, std::uint64_t p) { return matrix_coalgebra(n, field_for(p)); }, py::arg("n"),
      py::arg("characteristic") = 0);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a command-line invocation; returns (exit code, stdout, stderr).");
}
