#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oneloop/io.hpp"
#include "oneloop/report.hpp"
#include "oneloop/specfun.hpp"

namespace py = pybind11;
using namespace oneloop;

namespace {

// reports cross the boundary as (exit code, text, structured document as a string)
py::tuple pack(const Report& r) { return py::make_tuple(r.exit_code, r.text, dump_structured(r.data)); }

JobOptions options(unsigned precision, const std::string& method, long budget, std::uint64_t seed) {
    JobOptions o;
    o.precision = precision;
    o.method = method;
    o.budget = budget;
    o.seed = seed;
    return o;
}

}  // namespace

PYBIND11_MODULE(_oneloop, m) {
    m.doc() = "one-loop Feynman integral toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("format_graph", [](const std::string& text) { return format_graph(parse_graph(text)); },
          "Parse a graph description and print it back in canonical form.");

    m.def("symanzik", [](const std::string& graph) { return pack(report_symanzik(parse_graph(graph))); });

    m.def("eval", [](const std::string& graph, const std::string& kin, unsigned precision, const std::string& method,
                     long budget, std::uint64_t seed) {
              auto g = parse_graph(graph);
              return pack(report_eval(g, parse_kinematics(kin, g), options(precision, method, budget, seed)));
          },
          py::arg("graph"), py::arg("kinematics"), py::arg("precision") = 30, py::arg("method") = "adaptive",
          py::arg("budget") = 0, py::arg("seed") = 1);

    m.def("graded", [](std::optional<int> n, std::optional<int> triangle_massless) {
              return pack(report_graded(n, triangle_massless));
          },
          py::arg("n") = py::none(), py::arg("triangle_massless") = py::none());

    m.def("li2", [](const std::string& re, const std::string& im, unsigned digits) {
              PrecisionGuard g(digits + 10);
              return to_decimal(li2(Complex(Real(re), Real(im)), digits), static_cast<int>(digits));
          },
          py::arg("re"), py::arg("im") = "0", py::arg("digits") = 30,
          "Dilogarithm at re + i im; arguments and result are decimal strings.");

    m.def("clausen", [](const std::string& theta, unsigned digits) {
              PrecisionGuard g(digits + 10);
              return to_decimal(im_li2_unit(Real(theta)), static_cast<int>(digits));
          },
          py::arg("theta"), py::arg("digits") = 30);
}
