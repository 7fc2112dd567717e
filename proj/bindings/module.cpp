// Python module _core: the signed-graph operations behind the signedhodge
// package.  Exact integers cross the boundary as decimal strings turned into
// python ints, so nothing is ever truncated.

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sgh/coloring_complex.hpp"
#include "sgh/hodge.hpp"
#include "sgh/int_polynomial.hpp"
#include "sgh/signed_graph.hpp"

namespace py = pybind11;
using namespace sgh;

namespace {

py::int_ to_py(const Int& x) {
    const std::string digits = x.str();
    PyObject* raw = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!raw) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(raw);
}

py::list to_py(const std::vector<Int>& xs) {
    py::list out;
    for (const Int& x : xs) out.append(to_py(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact chromatic polynomials and Hodge decompositions of signed graphs";
#ifdef SGH_VERSION_INFO
    m.attr("__version__") = SGH_VERSION_INFO;
#endif

    py::class_<SignedGraph>(m, "SignedGraph",
                            "a signed graph on vertices 1..n: positive and negative pair "
                            "edges plus at most one half-edge per vertex")
        .def(py::init<int, std::set<SignedGraph::Pair>, std::set<SignedGraph::Pair>,
                      std::set<int>>(),
             py::arg("n"), py::arg("positive") = std::set<SignedGraph::Pair>{},
             py::arg("negative") = std::set<SignedGraph::Pair>{},
             py::arg("half") = std::set<int>{})
        .def_static("parse", [](const std::string& text) { return SignedGraph::parse(text); },
                    py::arg("text"), "parse the text format also accepted by the command line")
        .def_property_readonly("vertex_count", &SignedGraph::vertex_count)
        .def_property_readonly("edge_count", &SignedGraph::edge_count)
        .def_property_readonly("positive",
                               [](const SignedGraph& g) { return g.positive_edges(); })
        .def_property_readonly("negative",
                               [](const SignedGraph& g) { return g.negative_edges(); })
        .def_property_readonly("half", [](const SignedGraph& g) { return g.half_edges(); })
        .def("__str__", &SignedGraph::to_string)
        .def("__repr__",
             [](const SignedGraph& g) { return "SignedGraph(" + g.to_string() + ")"; })
        .def(py::self == py::self);

    m.def("switch_at", &switch_at, py::arg("graph"), py::arg("vertex"),
          "negate the colors seen at one vertex: flips the sign of every pair edge there");

    m.def("count_proper_colorings",
          [](const SignedGraph& g, int c) { return to_py(count_proper_colorings(g, c)); },
          py::arg("graph"), py::arg("c"),
          "number of proper colorings with colors -c..c (exact)");

    m.def("chromatic_polynomial",
          [](const SignedGraph& g) { return to_py(chromatic_polynomial(g).coeffs()); },
          py::arg("graph"),
          "coefficients of the chromatic polynomial, ascending by degree, "
          "via deletion-contraction");

    m.def("chromatic_by_interpolation",
          [](const SignedGraph& g) { return to_py(chromatic_by_interpolation(g).coeffs()); },
          py::arg("graph"),
          "the same coefficients recovered by interpolating brute-force counts");

    m.def("chromatic_string",
          [](const SignedGraph& g) { return chromatic_polynomial(g).to_string(); },
          py::arg("graph"), "the chromatic polynomial rendered as a string");

    m.def("chromatic_coefficients",
          [](const SignedGraph& g) { return to_py(chromatic_coefficients(g)); },
          py::arg("graph"),
          "c_0..c_{n-1}: the alternating-sign-normalized coefficients, all natural");

    m.def("f_vector",
          [](const SignedGraph& g) { return ColoringComplex(g).f_vector(); },
          py::arg("graph"), "face counts of the coloring complex from grade -1 upward");

    m.def("homology_dims",
          [](const SignedGraph& g) { return to_py(homology_dims(ColoringComplex(g))); },
          py::arg("graph"), "reduced homology dimensions, grades -1 .. n-2");

    m.def("hodge_dims_euler",
          [](const SignedGraph& g) { return to_py(hodge_dims_euler(ColoringComplex(g))); },
          py::arg("graph"),
          "Hodge summand dimensions of the top homology via alternating traces");

    m.def("hodge_dims_kernel",
          [](const SignedGraph& g) { return to_py(hodge_dims_kernel(ColoringComplex(g))); },
          py::arg("graph"),
          "the same dimensions via projector traces minus boundary ranks at the top");

    m.def("verify_json",
          [](const SignedGraph& g) { return to_json(verify_main_theorem(g)); },
          py::arg("graph"),
          "run the full battery of checks and return the report as a JSON string");
}
