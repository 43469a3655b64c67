#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "linetrees/acceptance.hpp"
#include "linetrees/arborescence.hpp"
#include "linetrees/cli.hpp"
#include "linetrees/crit_group.hpp"
#include "linetrees/db_codec.hpp"
#include "linetrees/json_io.hpp"
#include "linetrees/line_bijection.hpp"

namespace py = pybind11;
using namespace linetrees;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::int_(py::str(x.get_str()));
}

BigInt from_py(const py::int_& x) {
  return BigInt(py::str(x).cast<std::string>());
}

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::dict group_dict(const AbelianGroup& k) {
  py::dict d;
  d["invariant_factors"] = to_py(k.invariant_factors());
  d["free_rank"] = k.free_rank();
  d["description"] = k.to_string();
  d["order"] = k.is_finite() ? py::object(to_py(k.order())) : py::none();
  return d;
}

AbelianGroup group_from(const std::vector<py::int_>& orders) {
  std::vector<BigInt> xs;
  for (const auto& o : orders) xs.push_back(from_py(o));
  return AbelianGroup::from_cyclic_orders(std::move(xs));
}

DiGraph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                   std::vector<std::optional<std::string>> vertex_labels,
                   std::vector<std::optional<std::string>> edge_labels) {
  return build_graph(edges, n, std::move(vertex_labels), std::move(edge_labels));
}

EdgeOrder order_for(const DiGraph& g, std::optional<std::uint64_t> seed) {
  return seed ? EdgeOrder::shuffled(g.num_edges(), *seed) : EdgeOrder::identity(g.num_edges());
}

py::list terms(const GenPoly& p, const DiGraph& g) {
  py::list out;
  for (const auto& [m, c] : p.terms()) {
    py::list vars;
    for (auto v : m.vars()) vars.append(g.edge_name(EdgeId{v}));
    out.append(py::make_tuple(py::tuple(vars), to_py(c)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spanning trees of directed line graphs, de Bruijn sequence codec and critical groups";

  py::class_<DiGraph>(m, "DiGraph")
      .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"),
           py::arg("vertex_labels") = std::vector<std::optional<std::string>>{},
           py::arg("edge_labels") = std::vector<std::optional<std::string>>{})
      .def_property_readonly("num_vertices", &DiGraph::num_vertices)
      .def_property_readonly("num_edges", &DiGraph::num_edges)
      .def("edges",
           [](const DiGraph& g) {
             std::vector<std::pair<std::size_t, std::size_t>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.source.index(), e.target.index());
             return out;
           })
      .def("indeg", [](const DiGraph& g, std::size_t v) { return g.indeg(VertexId{v}); })
      .def("outdeg", [](const DiGraph& g, std::size_t v) { return g.outdeg(VertexId{v}); })
      .def("vertex_name", [](const DiGraph& g, std::size_t v) { return g.vertex_name(VertexId{v}); })
      .def("edge_name", [](const DiGraph& g, std::size_t e) { return g.edge_name(EdgeId{e}); })
      .def("to_json", [](const DiGraph& g) { return graph_to_json(g).dump(); })
      .def("to_edge_list",
           [](const DiGraph& g) {
             std::ostringstream out;
             write_edge_list(out, g);
             return out.str();
           })
      .def("to_dot",
           [](const DiGraph& g) {
             std::ostringstream out;
             write_dot(out, g);
             return out.str();
           })
      .def("__eq__", [](const DiGraph& a, const DiGraph& b) { return a == b; })
      .def("__repr__", [](const DiGraph& g) {
        return "<DiGraph " + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges>";
      });

  m.def("graph_from_json", [](const std::string& text) { return graph_from_json(json::parse(text)); });
  m.def("read_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });
  m.def("debruijn", &debruijn, py::arg("m"), py::arg("n"));
  m.def("kautz", &kautz, py::arg("m"), py::arg("n"));
  m.def("line_graph", [](const DiGraph& g) { return line_graph(g).graph; });
  m.def("is_eulerian", &is_eulerian);
  m.def("is_strongly_connected", &is_strongly_connected);
  m.def("class_cycle", [](const DiGraph& g) {
    std::vector<std::size_t> out;
    for (auto v : class_cycle(g)) out.push_back(v.index());
    return out;
  });

  m.def("count_trees", [](const DiGraph& g) { return to_py(count_trees(g)); });
  m.def("count_trees_rooted", [](const DiGraph& g, std::size_t r) { return to_py(count_trees_rooted(g, VertexId{r})); });
  m.def(
      "enumerate_trees",
      [](const DiGraph& g, std::uint64_t max_steps) {
        py::list out;
        for (const auto& t : enumerate_trees(g, {max_steps})) {
          py::list edges;
          for (const auto& e : t.out_edge) {
            if (e) edges.append(e->index());
          }
          out.append(py::make_tuple(t.root.index(), edges));
        }
        return out;
      },
      py::arg("g"), py::arg("max_steps") = EnumerationLimit{}.max_steps);
  m.def("verify_identity", [](const DiGraph& g) {
    IdentityReport r = verify_identity(g);
    py::dict d;
    d["holds"] = r.holds;
    d["lhs_terms"] = terms(r.lhs, g);
    d["rhs_terms"] = terms(r.rhs, g);
    return d;
  });
  m.def("knuth_check", [](const DiGraph& g) {
    KnuthReport r = knuth_check(g);
    py::dict d;
    d["holds"] = r.holds;
    d["line_graph_trees"] = to_py(r.line_graph_trees);
    d["graph_trees"] = to_py(r.graph_trees);
    d["degree_factor"] = to_py(r.degree_factor);
    return d;
  });

  m.def("count_tree_arrays", [](const DiGraph& g) { return to_py(count_tree_arrays(g)); });
  m.def(
      "enumerate_tree_arrays",
      [](const DiGraph& g) {
        std::vector<std::string> out;
        for (const auto& a : enumerate_tree_arrays(g)) out.push_back(tree_array_to_json(g, a).dump());
        return out;
      },
      "Every tree array as a JSON string.");
  m.def(
      "sigma",
      [](const DiGraph& g, const std::string& array_json, std::optional<std::uint64_t> order_seed) {
        LineTreeBijection bij(g, order_for(g, order_seed));
        return line_tree_to_json(bij, bij.sigma(tree_array_from_json(g, json::parse(array_json)))).dump();
      },
      py::arg("g"), py::arg("array_json"), py::arg("order_seed") = py::none());
  m.def(
      "pi",
      [](const DiGraph& g, const std::string& tree_json, std::optional<std::uint64_t> order_seed) {
        LineTreeBijection bij(g, order_for(g, order_seed));
        return tree_array_to_json(g, bij.pi(line_tree_from_json(bij, json::parse(tree_json)))).dump();
      },
      py::arg("g"), py::arg("tree_json"), py::arg("order_seed") = py::none());

  m.def("is_de_bruijn", &is_de_bruijn, py::arg("bits"), py::arg("n"));
  m.def("encode", [](const std::string& bits, unsigned n) { return encode(make_sequence(bits, n)); }, py::arg("bits"),
        py::arg("n"));
  m.def("decode", [](const std::string& bits, unsigned n) { return decode(bits, n).bits; }, py::arg("bits"), py::arg("n"));
  m.def("enumerate_db_sequences", [](unsigned n) {
    std::vector<std::string> out;
    for (const auto& b : enumerate_db_sequences(n)) out.push_back(b.bits);
    return out;
  });

  m.def("smith_normal_form", [](const std::vector<std::vector<py::int_>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntMatrix mat(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < c; ++j) mat(i, j) = from_py(rows[i][j]);
    }
    return to_py(smith_normal_form(mat).diagonal);
  });
  m.def("laplacian", [](const DiGraph& g) {
    IntMatrix l = laplacian(g);
    py::list rows;
    for (std::size_t i = 0; i < l.rows(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < l.cols(); ++j) row.append(to_py(l(i, j)));
      rows.append(row);
    }
    return rows;
  });
  m.def("critical_group", [](const DiGraph& g) { return group_dict(critical_group(g)); });
  m.def("sandpile_group", [](const DiGraph& g, std::size_t sink) { return group_dict(sandpile_group(g, VertexId{sink})); });
  m.def("db_formula", [](unsigned m_, unsigned n) { return group_dict(db_formula(m_, n).normalize()); });
  m.def("kautz_formula", [](unsigned m_, unsigned n) { return group_dict(kautz_formula(m_, n).normalize()); });
  m.def("group_order_db", [](unsigned m_, unsigned n) { return to_py(group_order_db(m_, n)); });
  m.def("group_order_kautz", [](unsigned m_, unsigned n) { return to_py(group_order_kautz(m_, n)); });
  m.def("kappa_db", [](unsigned m_, unsigned n) { return to_py(kappa_db(m_, n)); });
  m.def("kappa_kautz", [](unsigned m_, unsigned n) { return to_py(kappa_kautz(m_, n)); });
  m.def("mult_by_k", [](const std::vector<py::int_>& orders, const py::int_& k) {
    return group_dict(mult_by_k(group_from(orders), from_py(k)));
  });
  m.def("sylow", [](const std::vector<py::int_>& orders, const py::int_& p) {
    return group_dict(sylow(group_from(orders), from_py(p)));
  });

  m.def("run_acceptance", [] {
    py::list out;
    for (const auto& r : run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["title"] = r.title;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
