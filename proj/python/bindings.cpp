#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "cdgraph/closed_forms.hpp"
#include "cdgraph/families.hpp"
#include "cdgraph/io.hpp"
#include "cdgraph/spectral.hpp"
#include "cdgraph/validity.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py(const cdg::BigInt& value) {
    const std::string s = value.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list matrix_rows(const cdg::IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.n; ++i) {
        py::list row;
        for (int j = 0; j < m.n; ++j) row.append(to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list poly_coeffs(const cdg::IntPolynomial& p) {
    py::list coeffs;
    for (const auto& c : p.coeffs) coeffs.append(to_py(c));
    return coeffs;
}

py::dict spectrum_dict(const cdg::Spectrum& s) {
    py::dict d;
    py::list values;
    for (const auto& [value, mult] : s.values) {
        values.append(py::make_tuple(value, mult));
    }
    d["values"] = values;
    d["residual"] = poly_coeffs(s.residual);
    d["fully_factored"] = s.fully_factored();
    return d;
}

py::object json_to_py(const cdg::io::OrderedJson& j) {
    using Json = cdg::io::OrderedJson;
    switch (j.type()) {
        case Json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) {
                d[py::str(key)] = json_to_py(value);
            }
            return d;
        }
        case Json::value_t::array: {
            py::list l;
            for (const auto& item : j) l.append(json_to_py(item));
            return l;
        }
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

cdg::FamilyParams make_params(const std::string& family, int n, int n1) {
    const auto f = cdg::family_from_name(family);
    if (!f) throw std::invalid_argument("unknown family '" + family + "'");
    return cdg::FamilyParams{*f, n, n1};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Laplacian and distance-Laplacian spectra of character-degree-graph "
              "families";

    py::class_<cdg::Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &cdg::Graph::vertex_count)
        .def("vertex_count", &cdg::Graph::vertex_count)
        .def("edge_count", &cdg::Graph::edge_count)
        .def("degree", &cdg::Graph::degree, py::arg("v"))
        .def("adjacent", &cdg::Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("neighbors", &cdg::Graph::neighbors, py::arg("v"))
        .def("edges", &cdg::Graph::edges)
        .def("degree_sequence", &cdg::Graph::degree_sequence)
        .def("complement", &cdg::Graph::complement)
        .def("__eq__",
             [](const cdg::Graph& a, const cdg::Graph& b) { return a == b; })
        .def("__repr__", [](const cdg::Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete", &cdg::complete, py::arg("n"));
    m.def("cocktail_party", &cdg::cocktail_party, py::arg("n"));
    m.def("supergraph", &cdg::supergraph, py::arg("n"), py::arg("n1"));
    m.def("two_clique_cut_vertex", &cdg::two_clique_cut_vertex, py::arg("n"),
          py::arg("n1"));
    m.def("direct_product_join", &cdg::direct_product_join, py::arg("a"), py::arg("b"));
    m.def("operation_d", &cdg::operation_d, py::arg("g"));

    m.def("distances", [](const cdg::Graph& g) {
        const auto t = cdg::distances(g);
        py::list rows;
        for (int u = 0; u < t.n; ++u) {
            py::list row;
            for (int v = 0; v < t.n; ++v) row.append(t.at(u, v));
            rows.append(row);
        }
        return rows;
    });
    m.def("diameter", [](const cdg::Graph& g) -> py::object {
        const auto d = cdg::diameter(g);
        return d ? py::cast(*d) : py::none();
    });
    m.def("connected_components", &cdg::connected_components, py::arg("g"));
    m.def("block_decomposition", [](const cdg::Graph& g) {
        const auto bd = cdg::block_decomposition(g);
        py::dict d;
        d["blocks"] = bd.blocks;
        d["cut_vertices"] = bd.cut_vertices;
        return d;
    });

    m.def("laplacian",
          [](const cdg::Graph& g) { return matrix_rows(cdg::laplacian(g)); });
    m.def("distance_laplacian",
          [](const cdg::Graph& g) { return matrix_rows(cdg::distance_laplacian(g)); });
    m.def("laplacian_char_poly", [](const cdg::Graph& g) {
        return poly_coeffs(cdg::char_poly(cdg::laplacian(g)));
    });
    m.def("distance_laplacian_char_poly", [](const cdg::Graph& g) {
        return poly_coeffs(cdg::char_poly(cdg::distance_laplacian(g)));
    });
    m.def("laplacian_spectrum", [](const cdg::Graph& g) {
        const int n = g.vertex_count();
        return spectrum_dict(cdg::integer_spectrum(cdg::char_poly(cdg::laplacian(g)), n));
    });
    m.def("distance_laplacian_spectrum", [](const cdg::Graph& g) {
        const long bound = 2L * g.vertex_count();
        return spectrum_dict(
            cdg::integer_spectrum(cdg::char_poly(cdg::distance_laplacian(g)), bound));
    });
    m.def("spanning_tree_count",
          [](const cdg::Graph& g) { return to_py(cdg::spanning_tree_count(g)); });

    m.def("full_report", [](const cdg::Graph& g) {
        const cdg::io::GraphDocument doc{g, {}};
        return json_to_py(cdg::io::check_report_json(doc, cdg::full_report(g)));
    });
    m.def(
        "verify_family",
        [](const std::string& family, int n, int n1) {
            const auto report = cdg::verify_family(make_params(family, n, n1));
            return json_to_py(cdg::io::verify_point_json(report));
        },
        py::arg("family"), py::arg("n"), py::arg("n1") = 0);

    m.def("parse_graph_json", [](const std::string& text) {
        return cdg::io::parse_graph_json(text).graph;
    });
    m.def("write_graph_json", [](const cdg::Graph& g) {
        return cdg::io::write_graph_json({g, {}});
    });
}
