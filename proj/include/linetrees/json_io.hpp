#ifndef LINETREES_JSON_IO_HPP
#define LINETREES_JSON_IO_HPP

#include <json.hpp>

#include "linetrees/arborescence.hpp"
#include "linetrees/crit_group.hpp"
#include "linetrees/digraph.hpp"
#include "linetrees/line_bijection.hpp"

namespace linetrees {

using json = nlohmann::json;

class JsonShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph: {"vertices": [name, ...], "edges": [[s, t, label], ...]}, s and t
// being vertex indices.
json graph_to_json(const DiGraph& g);
DiGraph graph_from_json(const json& j);

// Tree array: {"root": vertex, "lists": {vertex: [edge | "OMEGA", ...]}}.
// Vertices and edges are referenced by name (DiGraph::vertex_name / edge_name).
inline constexpr const char* kOmegaToken = "OMEGA";
json tree_array_to_json(const DiGraph& g, const TreeArray& a);
TreeArray tree_array_from_json(const DiGraph& g, const json& j);

// Spanning tree of G: {"root": vertex, "edges": [edge, ...]}.
json spanning_tree_to_json(const DiGraph& g, const SpanningTree& t);
SpanningTree spanning_tree_from_json(const DiGraph& g, const json& j);

// Spanning tree of the line graph of G, written in terms of G's edges:
// {"root": edge, "edges": [[f, g], ...]} where each pair is a tree edge f -> g.
json line_tree_to_json(const LineTreeBijection& bij, const SpanningTree& t);
SpanningTree line_tree_from_json(const LineTreeBijection& bij, const json& j);

json big_to_json(const BigInt& x);
json group_to_json(const AbelianGroup& k);

}  // namespace linetrees

#endif  // LINETREES_JSON_IO_HPP
