#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khova/knot_table.hpp"
#include "khova/report.hpp"

namespace py = pybind11;
using namespace khova;

namespace {

Flavor parse_flavor(const std::string& s) {
  if (s == "both") return Flavor::Both;
  if (s == "reduced") return Flavor::Reduced;
  if (s == "unreduced") return Flavor::Unreduced;
  throw Error("argument", "flavor must be 'both', 'reduced' or 'unreduced'");
}

std::string compute_json(const KnotDiagram& d, const std::string& flavor, std::optional<std::string> marked,
                         const std::string& field, std::size_t max_crossings) {
  ComputeOptions opt;
  opt.flavor = parse_flavor(flavor);
  opt.marked = std::move(marked);
  opt.field = Field::parse(field);
  opt.max_crossings = max_crossings;
  DiagramReport report;
  {
    py::gil_scoped_release release;
    report = cmd_compute(d, opt);
  }
  return to_json(report).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Khovanov homology and Jones superpolynomials";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "KhovaError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = error_type.get_stored()(e.what());
      instance.attr("kind") = e.kind();
      PyErr_SetObject(error_type.get_stored().ptr(), instance.ptr());
    }
  });

  py::class_<KnotDiagram>(m, "Diagram")
      .def_property_readonly("crossing_count", &KnotDiagram::crossing_count)
      .def_property_readonly("edge_count", &KnotDiagram::edge_count)
      .def_property_readonly("n_black", &KnotDiagram::n_black)
      .def_property_readonly("n_white", &KnotDiagram::n_white)
      .def_property_readonly("component_count", &KnotDiagram::component_count)
      .def_property_readonly("edges",
                             [](const KnotDiagram& d) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < d.edge_count(); ++i)
                                 out.push_back(d.edge_name(EdgeLabel{static_cast<int>(i)}));
                               return out;
                             })
      .def("pd_text", &to_pd_text)
      .def("__repr__", [](const KnotDiagram& d) { return "<khova.Diagram " + to_pd_text(d) + ">"; });

  m.def("parse_braid_word", &parse_braid_word, py::arg("word"), py::arg("strands"));
  m.def("parse_pd_code", &parse_pd_code, py::arg("text"));

  m.def(
      "jones",
      [](const KnotDiagram& d, std::size_t max_crossings) {
        return to_string(state_sum_jones(build_hypercube(d, max_crossings), d));
      },
      py::arg("diagram"), py::arg("max_crossings") = kDefaultMaxCrossings);

  m.def(
      "extended_jones",
      [](const KnotDiagram& d) {
        std::vector<std::tuple<int, std::vector<std::size_t>, std::size_t>> out;
        for (const auto& t : extended_jones(build_hypercube(d))) out.emplace_back(t.t_power, t.lengths, t.multiplicity);
        return out;
      },
      py::arg("diagram"));

  m.def("compute_json", &compute_json, py::arg("diagram"), py::arg("flavor") = "both",
        py::arg("marked") = std::nullopt, py::arg("field") = "q", py::arg("max_crossings") = kDefaultMaxCrossings);

  m.def(
      "verify_table_json",
      [](const std::string& path, unsigned jobs) {
        const auto entries = load_knot_table(path);
        VerifyOptions opt;
        opt.jobs = jobs;
        RunReport report;
        {
          py::gil_scoped_release release;
          report = batch_verify(entries, opt);
        }
        return to_json(report).dump();
      },
      py::arg("path"), py::arg("jobs") = 1);
}
