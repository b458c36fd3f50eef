#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psdthrottle/closed_forms.hpp"
#include "psdthrottle/cops.hpp"
#include "psdthrottle/error.hpp"
#include "psdthrottle/generators.hpp"
#include "psdthrottle/graph_io.hpp"
#include "psdthrottle/metrics.hpp"
#include "psdthrottle/operations.hpp"
#include "psdthrottle/psd.hpp"
#include "psdthrottle/throttling.hpp"

namespace py = pybind11;
using namespace psdthrottle;

namespace {

// None stands for infinity.
py::object to_py(const ExtendedInt& v) { return v.is_infinite() ? py::none() : py::object(py::int_(v.value())); }

VertexSet to_set(const std::vector<Vertex>& vs) { return VertexSet::from(vs); }

py::dict witness_dict(const ThrottlingWitness& w) {
  py::dict d;
  d["parameter"] = std::string(to_string(w.parameter));
  d["value"] = to_py(w.value);
  d["witness"] = w.witness.to_vector();
  d["pt"] = to_py(w.witness_pt);
  d["k_searched"] = py::make_tuple(w.k_min, w.k_max);
  return d;
}

SearchOptions search_options(int workers, int max_vertices) {
  SearchOptions o;
  o.workers = workers;
  o.max_vertices = max_vertices;
  return o;
}

}  // namespace

PYBIND11_MODULE(_psdthrottle, m) {
  m.doc() = "Positive semidefinite zero forcing, propagation time and product throttling";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<EdgeError>(m, "EdgeError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
  py::register_exception<UndefinedParameterError>(m, "UndefinedParameterError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DisconnectedError>(m, "DisconnectedError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.emplace_back(u, v);
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degree", &Graph::degree)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<Graph n=" + std::to_string(g.order()) + " " + encode_graph6(g) + ">"; });

  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("complete", &complete);
  m.def("star", &star);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(parts); });
  m.def("hypercube", &hypercube);
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("complement", &complement);
  m.def("cartesian_product", &cartesian_product);
  m.def("subdivide_edge", [](const Graph& g, int u, int v) { return subdivide_edge(g, Edge(u, v)); });
  m.def("delete_edge", [](const Graph& g, int u, int v) { return delete_edge(g, Edge(u, v)); });
  m.def("radius", &radius);
  m.def("k_radius", [](const Graph& g, int k) { return k_radius(g, k); });

  m.def("prop_time", [](const Graph& g, const std::vector<Vertex>& s) { return to_py(prop_time(g, to_set(s))); });
  m.def("propagate", [](const Graph& g, const std::vector<Vertex>& s) {
    const PropagationTrace t = propagate(g, to_set(s));
    py::list rounds;
    for (const VertexSet& r : t.rounds) rounds.append(r.to_vector());
    py::list forces;
    for (const Force& f : t.forces) forces.append(py::make_tuple(f.forcer, f.forced, f.round));
    py::dict d;
    d["rounds"] = rounds;
    d["forces"] = forces;
    d["status"] = t.status == PropagationStatus::forced_all ? "forced_all" : "stalled";
    d["pt"] = to_py(t.propagation_time());
    return d;
  });
  m.def("format_trace", [](const Graph& g, const std::vector<Vertex>& s, bool one_indexed) {
    return format_trace(propagate(g, to_set(s)), one_indexed);
  }, py::arg("g"), py::arg("s"), py::arg("one_indexed") = false);

  const auto opts = [](auto f) {
    return [f](const Graph& g, int workers, int max_vertices) {
      return witness_dict(f(g, search_options(workers, max_vertices)));
    };
  };
  m.def("z_plus", opts([](const Graph& g, const SearchOptions& o) { return z_plus(g, o); }), py::arg("g"),
        py::arg("workers") = 1, py::arg("max_vertices") = 24);
  m.def("th_sum", opts([](const Graph& g, const SearchOptions& o) { return th_sum(g, o); }), py::arg("g"),
        py::arg("workers") = 1, py::arg("max_vertices") = 24);
  m.def("th_times", opts([](const Graph& g, const SearchOptions& o) { return th_times(g, o); }), py::arg("g"),
        py::arg("workers") = 1, py::arg("max_vertices") = 24);
  m.def("th_star", opts([](const Graph& g, const SearchOptions& o) { return th_star(g, o); }), py::arg("g"),
        py::arg("workers") = 1, py::arg("max_vertices") = 24);
  m.def("pt_k", [](const Graph& g, int k, int workers, int max_vertices) {
    return witness_dict(pt_k(g, k, search_options(workers, max_vertices)));
  }, py::arg("g"), py::arg("k"), py::arg("workers") = 1, py::arg("max_vertices") = 24);

  m.def("oracle_all", [](const Graph& g) {
    const OracleRecord o = oracle_all(g);
    py::list pts;
    for (const ExtendedInt& p : o.pt_by_k) pts.append(to_py(p));
    py::dict d;
    d["z_plus"] = o.z_plus;
    d["pt_plus"] = to_py(o.pt_plus);
    d["pt_by_k"] = pts;
    d["th_sum"] = o.th_sum;
    d["th_times"] = o.th_times;
    d["th_star"] = o.th_star ? py::object(py::int_(*o.th_star)) : py::none();
    return d;
  });

  m.def("capture_time", [](const Graph& g, const std::vector<Vertex>& cops) { return to_py(capture_time(g, cops)); });
  m.def("capt_k", [](const Graph& g, int k) {
    const CaptureWitness w = capt_k(g, k);
    return py::make_tuple(to_py(w.value), w.placement.to_vector());
  });
  m.def("cop_number", [](const Graph& g) { return cop_number(g); });
  m.def("th_times_cops", [](const Graph& g) {
    const CopThrottling t = th_times_cops(g);
    py::dict d;
    d["cop_number"] = t.cop_number;
    d["th_times"] = t.th_times;
    d["witness"] = t.th_times_witness.to_vector();
    d["th_star"] = t.th_star ? py::object(py::int_(*t.th_star)) : py::none();
    return d;
  });

  m.def("th_times_cycle", &th_times_cycle);
  m.def("family_values", [](const std::string& row, const std::vector<int>& params) {
    const FamilyRecord r = family_values(parse_table_row(row), params);
    const auto opt = [](const std::optional<int>& v) { return v ? py::object(py::int_(*v)) : py::none(); };
    py::dict d;
    d["family"] = std::string(to_string(r.row));
    d["z_plus"] = opt(r.z_plus);
    d["pt_plus"] = opt(r.pt_plus);
    d["th_times"] = opt(r.th_times);
    d["th_star"] = opt(r.th_star);
    return d;
  });
  m.def("bound_report", [](const Graph& g) {
    const BoundReport r = bound_report(g, summarize(g));
    py::list entries;
    for (const BoundEntry& e : r.entries) {
      py::dict d;
      d["bound"] = e.name;
      d["lhs"] = e.lhs;
      d["relation"] = std::string(to_string(e.relation));
      d["rhs"] = e.rhs;
      d["holds"] = e.holds;
      d["applicable"] = e.applicable;
      d["note"] = e.note;
      entries.append(d);
    }
    return entries;
  });
}
