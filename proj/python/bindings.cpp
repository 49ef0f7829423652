#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srdef/cli.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/error.hpp"
#include "srdef/io.hpp"
#include "srdef/oracle.hpp"
#include "srdef/versal.hpp"

namespace py = pybind11;
using namespace srdef;

namespace {

std::vector<std::vector<int>> sets(const std::vector<VertexSet>& v) {
    std::vector<std::vector<int>> out;
    for (const auto& s : v) out.push_back(s.to_vector());
    return out;
}

}  // namespace

PYBIND11_MODULE(_srdef, m) {
    m.doc() = "Deformations of Stanley-Reisner schemes";

    py::register_exception<Error>(m, "SrdefError");

    py::class_<SimplicialComplex>(m, "Complex")
        .def_static("from_facets",
                    [](const std::vector<std::vector<int>>& facets, int n) {
                        std::vector<VertexSet> fs;
                        for (const auto& f : facets) fs.emplace_back(f);
                        return SimplicialComplex::from_facets(std::move(fs), n);
                    })
        .def_property_readonly("n_vertices", &SimplicialComplex::n_vertices)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def_property_readonly("facets", [](const SimplicialComplex& K) { return sets(K.facets()); })
        .def("f_vector", &SimplicialComplex::f_vector)
        .def("contains", [](const SimplicialComplex& K, const std::vector<int>& f) { return K.contains(VertexSet(f)); })
        .def("__repr__", &SimplicialComplex::str);

    m.def("load", [](const std::string& source) { return load_complex(source); }, "facet file path or named complex");
    m.def("b_set", [](const SimplicialComplex& K) { return sets(b_set(K)); });
    m.def("t_dim",
          [](const SimplicialComplex& K, int i, const std::vector<int>& a, const std::vector<int>& b) {
              return t_graded_dim(K, i, VertexSet(a), VertexSet(b));
          },
          py::arg("K"), py::arg("i"), py::arg("a"), py::arg("b"));
    m.def("oracle_dim",
          [](const SimplicialComplex& K, int i, const std::string& a, const std::string& b) {
              const Multidegree c = Multidegree::parse(a, b);
              return i == 1 ? t1_oracle_dim(K, c) : t2_oracle_dim(K, c);
          },
          py::arg("K"), py::arg("i"), py::arg("a"), py::arg("b"));
    m.def("degree_zero_totals",
          [](const SimplicialComplex& K, int workers) {
              const DegreeZeroSummary s = degree_zero_totals(K, workers, true);
              py::dict d;
              d["t1"] = s.t1_total;
              d["t2"] = s.t2_total;
              d["t1_by_face_dim"] = s.t1_by_face_dim;
              d["t2_by_face_dim"] = s.t2_by_face_dim;
              return d;
          },
          py::arg("K"), py::arg("workers") = 0);
    m.def("surface_t1_projective", [](const SimplicialComplex& K) { return surface_formulas(K).t1_projective; });
    m.def("versal_variables", [](const SimplicialComplex& K) { return versal_variables(K).names; });
    m.def("krull_dimension", [](const SimplicialComplex& K) { return krull_dimension(versal_ideal(K)).dimension; });
    m.def("p_series", [](int order) {
        std::vector<std::string> out;
        for (const auto& c : p_series(order)) out.push_back(c.get_str());
        return out;
    });
    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          "Runs one command; returns (exit code, stdout, stderr).");
}
