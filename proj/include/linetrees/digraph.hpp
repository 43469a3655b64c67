#ifndef LINETREES_DIGRAPH_HPP
#define LINETREES_DIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linetrees {

/// Dense index with a tag so vertex and edge ids cannot be mixed up.
template <class Tag>
struct Index {
  std::uint32_t value = 0;

  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}
  constexpr explicit Index(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit Index(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(Index, Index) = default;
};

using VertexId = Index<struct VertexTag>;
using EdgeId = Index<struct EdgeTag>;

struct Edge {
  VertexId source;
  VertexId target;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown for malformed graph input (empty vertex set, bad index, bad text).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FamilyKind { DeBruijn, Kautz };

/// Records that a graph is DB_n(m) or Kautz_n(m) with string-labeled vertices.
struct Family {
  FamilyKind kind;
  unsigned m;
  unsigned n;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string to_string(FamilyKind kind);

/// Finite directed multigraph. Edges are kept as individual records in
/// insertion order; that order is the default total order on edges.
/// Immutable once built.
class DiGraph {
 public:
  DiGraph(std::size_t num_vertices, std::vector<Edge> edges,
          std::vector<std::optional<std::string>> vertex_labels = {},
          std::vector<std::optional<std::string>> edge_labels = {},
          std::optional<Family> family = std::nullopt);

  std::size_t num_vertices() const { return indeg_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e.index()]; }
  VertexId source(EdgeId e) const { return edges_[e.index()].source; }
  VertexId target(EdgeId e) const { return edges_[e.index()].target; }
  std::span<const Edge> edges() const { return edges_; }

  std::size_t indeg(VertexId v) const { return indeg_[v.index()]; }
  std::size_t outdeg(VertexId v) const { return outdeg_[v.index()]; }

  /// Out-edges of v in increasing edge id order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_[v.index()]; }
  std::span<const EdgeId> in_edges(VertexId v) const { return in_edges_[v.index()]; }

  /// Position of e within out_edges(source(e)).
  std::size_t out_position(EdgeId e) const { return out_position_[e.index()]; }

  const std::optional<std::string>& vertex_label(VertexId v) const { return vertex_labels_[v.index()]; }
  const std::optional<std::string>& edge_label(EdgeId e) const { return edge_labels_[e.index()]; }

  /// Label if present, otherwise the decimal index.
  std::string vertex_name(VertexId v) const;
  /// Label if present, otherwise "e<index>".
  std::string edge_name(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// First edge u -> v in id order.
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  const std::optional<Family>& family() const { return family_; }

  bool has_vertex_labels() const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.edges_ == b.edges_ && a.vertex_labels_ == b.vertex_labels_ &&
           a.edge_labels_ == b.edge_labels_ && a.indeg_.size() == b.indeg_.size();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::optional<std::string>> vertex_labels_;
  std::vector<std::optional<std::string>> edge_labels_;
  std::vector<std::size_t> indeg_;
  std::vector<std::size_t> outdeg_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::vector<std::size_t> out_position_;
  std::optional<Family> family_;
};

/// Builds a graph from (source, target) index pairs. The vertex count is
/// max index + 1 unless given explicitly.
DiGraph build_graph(std::span<const std::pair<std::size_t, std::size_t>> edge_list,
                    std::optional<std::size_t> num_vertices = std::nullopt,
                    std::vector<std::optional<std::string>> vertex_labels = {},
                    std::vector<std::optional<std::string>> edge_labels = {});

/// Vertex i of the line graph is edge i of the original graph.
class LineGraphMap {
 public:
  explicit LineGraphMap(std::size_t num_edges = 0);

  VertexId forward(EdgeId e) const { return forward_[e.index()]; }
  EdgeId backward(VertexId v) const { return backward_[v.index()]; }
  std::size_t size() const { return forward_.size(); }

 private:
  std::vector<VertexId> forward_;
  std::vector<EdgeId> backward_;
};

struct LineGraph {
  DiGraph graph;
  LineGraphMap map;
};

/// Directed line graph: one vertex per edge, one edge (e,f) per pair with
/// t(e) = s(f). Edges are ordered by e, then by the position of f among the
/// out-edges of t(e).
LineGraph line_graph(const DiGraph& g);

/// DB_n(m): vertices are the length-n strings over m symbols, in
/// lexicographic order; edges are the length-(n+1) strings, also in
/// lexicographic order.
DiGraph debruijn(unsigned m, unsigned n);

/// Kautz_n(m): vertices are the length-n strings over m+1 symbols with no two
/// equal adjacent characters, in lexicographic order; edges likewise for
/// length n+1.
DiGraph kautz(unsigned m, unsigned n);

DiGraph family_graph(const Family& family);

bool is_eulerian(const DiGraph& g);
bool is_strongly_connected(const DiGraph& g);

/// Same vertex label set and same multiset of (source label, target label)
/// pairs. Requires labels on every vertex.
bool same_labeled_structure(const DiGraph& a, const DiGraph& b);

/// Groups string-labeled vertices by their last n-1 characters. Classes are
/// listed in order of their first member.
std::vector<std::vector<VertexId>> similarity_classes(const DiGraph& g);

/// A cycle of length |V|/m meeting every similarity class once, for
/// DB_{n+1}(m) or Kautz_{n+1}(m).
std::vector<VertexId> class_cycle(const DiGraph& g);

/// Closed walk using every edge once, starting at `start`. Edges are taken in
/// id order (Hierholzer). Requires an Eulerian graph whose edges are all
/// reachable from `start`.
std::vector<EdgeId> eulerian_circuit(const DiGraph& g, VertexId start = VertexId{0u});

// Text formats.

/// "SRC DST [LABEL]" per line, '#' starts a comment; vertex names are
/// numbered in first-appearance order.
DiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const DiGraph& g);
void write_dot(std::ostream& out, const DiGraph& g, std::string_view name = "G");

}  // namespace linetrees

#endif  // LINETREES_DIGRAPH_HPP
