#include "linetrees/json_io.hpp"

namespace linetrees {

namespace {

VertexId vertex_ref(const DiGraph& g, const json& ref) {
  if (!ref.is_string()) throw JsonShapeError("vertex references must be strings");
  auto v = g.find_vertex(ref.get<std::string>());
  if (!v) throw JsonShapeError("unknown vertex '" + ref.get<std::string>() + "'");
  return *v;
}

EdgeId edge_ref(const DiGraph& g, const json& ref) {
  if (!ref.is_string()) throw JsonShapeError("edge references must be strings");
  auto e = g.find_edge(ref.get<std::string>());
  if (!e) throw JsonShapeError("unknown edge '" + ref.get<std::string>() + "'");
  return *e;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonShapeError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

json graph_to_json(const DiGraph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) vertices.push_back(g.vertex_name(VertexId{v}));
  json edges = json::array();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EdgeId e{i};
    edges.push_back({g.source(e).index(), g.target(e).index(), g.edge_name(e)});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

DiGraph graph_from_json(const json& j) {
  const json& vertices = field(j, "vertices");
  const json& edges = field(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw JsonShapeError("'vertices' and 'edges' must be arrays");
  std::vector<std::optional<std::string>> vlabels;
  for (const auto& v : vertices) {
    if (!v.is_string()) throw JsonShapeError("vertex names must be strings");
    vlabels.emplace_back(v.get<std::string>());
  }
  std::vector<Edge> list;
  std::vector<std::optional<std::string>> elabels;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw JsonShapeError("edges must be [source, target, label?] with vertex indices");
    }
    list.push_back({VertexId{e[0].get<std::size_t>()}, VertexId{e[1].get<std::size_t>()}});
    elabels.push_back(e.size() == 3 ? std::optional<std::string>(e[2].get<std::string>()) : std::nullopt);
  }
  const std::size_t n = vlabels.size();
  return DiGraph(n, std::move(list), std::move(vlabels), std::move(elabels));
}

json tree_array_to_json(const DiGraph& g, const TreeArray& a) {
  json lists = json::object();
  for (std::size_t v = 0; v < a.lists.size(); ++v) {
    json entries = json::array();
    for (const auto& entry : a.lists[v]) {
      entries.push_back(entry.is_omega() ? std::string(kOmegaToken) : g.edge_name(entry.edge()));
    }
    lists[g.vertex_name(VertexId{v})] = entries;
  }
  return {{"root", g.vertex_name(a.root)}, {"lists", lists}};
}

TreeArray tree_array_from_json(const DiGraph& g, const json& j) {
  TreeArray a;
  a.root = vertex_ref(g, field(j, "root"));
  const json& lists = field(j, "lists");
  if (!lists.is_object()) throw JsonShapeError("'lists' must be an object keyed by vertex");
  a.lists.resize(g.num_vertices());
  for (const auto& [name, entries] : lists.items()) {
    VertexId v = vertex_ref(g, json(name));
    if (!entries.is_array()) throw JsonShapeError("list of '" + name + "' must be an array");
    for (const auto& entry : entries) {
      if (entry.is_string() && entry.get<std::string>() == kOmegaToken) {
        a.lists[v.index()].push_back(ArrayEntry::omega());
      } else {
        a.lists[v.index()].push_back(ArrayEntry::of(edge_ref(g, entry)));
      }
    }
  }
  return a;
}

json spanning_tree_to_json(const DiGraph& g, const SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.out_edge) {
    if (e) edges.push_back(g.edge_name(*e));
  }
  return {{"root", g.vertex_name(t.root)}, {"edges", edges}};
}

SpanningTree spanning_tree_from_json(const DiGraph& g, const json& j) {
  SpanningTree t;
  t.root = vertex_ref(g, field(j, "root"));
  t.out_edge.assign(g.num_vertices(), std::nullopt);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw JsonShapeError("'edges' must be an array");
  for (const auto& ref : edges) {
    EdgeId e = edge_ref(g, ref);
    auto& slot = t.out_edge[g.source(e).index()];
    if (slot) throw JsonShapeError("two tree edges leave " + g.vertex_name(g.source(e)));
    slot = e;
  }
  return t;
}

json line_tree_to_json(const LineTreeBijection& bij, const SpanningTree& t) {
  const DiGraph& g = bij.graph();
  const DiGraph& lg = bij.line_graph();
  json edges = json::array();
  for (std::size_t f = 0; f < t.out_edge.size(); ++f) {
    if (!t.out_edge[f]) continue;
    edges.push_back({g.edge_name(EdgeId{f}), g.edge_name(EdgeId{lg.target(*t.out_edge[f]).index()})});
  }
  return {{"root", g.edge_name(EdgeId{t.root.index()})}, {"edges", edges}};
}

SpanningTree line_tree_from_json(const LineTreeBijection& bij, const json& j) {
  const DiGraph& g = bij.graph();
  SpanningTree t;
  t.root = VertexId{edge_ref(g, field(j, "root")).index()};
  t.out_edge.assign(g.num_edges(), std::nullopt);
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw JsonShapeError("'edges' must be an array");
  for (const auto& pair : edges) {
    if (!pair.is_array() || pair.size() != 2) throw JsonShapeError("line tree edges must be [f, g] pairs");
    EdgeId f = edge_ref(g, pair[0]);
    EdgeId next = edge_ref(g, pair[1]);
    if (g.target(f) != g.source(next)) {
      throw JsonShapeError("(" + g.edge_name(f) + "," + g.edge_name(next) + ") is not an edge of the line graph");
    }
    auto& slot = t.out_edge[f.index()];
    if (slot) throw JsonShapeError("two tree edges leave " + g.edge_name(f));
    slot = bij.line_edge(f, next);
  }
  return t;
}

json big_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json group_to_json(const AbelianGroup& k) {
  json factors = json::array();
  for (const auto& d : k.invariant_factors()) factors.push_back(big_to_json(d));
  json out = {{"invariant_factors", factors}, {"free_rank", k.free_rank()}, {"description", k.to_string()}};
  if (k.is_finite()) out["order"] = k.order().get_str();
  return out;
}

}  // namespace linetrees
