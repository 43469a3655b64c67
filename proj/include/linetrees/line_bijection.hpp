#ifndef LINETREES_LINE_BIJECTION_HPP
#define LINETREES_LINE_BIJECTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linetrees/arborescence.hpp"
#include "linetrees/digraph.hpp"

namespace linetrees {

/// One slot of a tree array: an edge, or the Omega terminator.
class ArrayEntry {
 public:
  static constexpr ArrayEntry omega() { return ArrayEntry(); }
  static constexpr ArrayEntry of(EdgeId e) { return ArrayEntry(e); }

  constexpr bool is_omega() const { return !edge_; }
  /// Precondition: !is_omega().
  constexpr EdgeId edge() const { return *edge_; }

  friend constexpr bool operator==(const ArrayEntry&, const ArrayEntry&) = default;

 private:
  constexpr ArrayEntry() = default;
  constexpr explicit ArrayEntry(EdgeId e) : edge_(e) {}

  std::optional<EdgeId> edge_;
};

/// Per-vertex lists whose last entries form a spanning tree of G; the root's
/// list ends with Omega instead.
///   - lists[v].size() == indeg(v)
///   - every edge in lists[v] leaves v
///   - exactly one Omega, last in lists[root]
///   - last entries of the non-root lists form a spanning tree rooted at root
struct TreeArray {
  VertexId root;
  std::vector<std::vector<ArrayEntry>> lists;

  friend bool operator==(const TreeArray&, const TreeArray&) = default;
};

/// Per-vertex lists of indeg(v) - 1 out-edges of v.
using ProtoLists = std::vector<std::vector<EdgeId>>;

class InvalidTreeArray : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLineTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<std::string> tree_array_error(const DiGraph& g, const TreeArray& a);

/// Spanning tree of G formed by the last entries of the non-root lists.
SpanningTree last_entries_tree(const DiGraph& g, const TreeArray& a);

/// count[e] = occurrences of e in lists[s(e)].
std::vector<std::size_t> entry_counts(const DiGraph& g, const TreeArray& a);

TreeArray make_tree_array(const DiGraph& g, const SpanningTree& tree, const ProtoLists& proto);

/// Total order on edges: rank(e) is e's position.
class EdgeOrder {
 public:
  static EdgeOrder identity(std::size_t num_edges);
  /// `sequence` lists every edge exactly once, smallest first.
  static EdgeOrder from_sequence(std::vector<EdgeId> sequence);
  /// Fisher-Yates shuffle of the identity driven by mt19937_64(seed).
  static EdgeOrder shuffled(std::size_t num_edges, std::uint64_t seed);

  std::size_t size() const { return sequence_.size(); }
  std::uint32_t rank(EdgeId e) const { return rank_[e.index()]; }
  const std::vector<EdgeId>& sequence() const { return sequence_; }

 private:
  std::vector<EdgeId> sequence_;
  std::vector<std::uint32_t> rank_;
};

/// The tree-array <-> line-graph spanning tree bijection for one graph G
/// under one edge order. Spanning trees returned by sigma and taken by pi
/// live on line_graph(), whose vertex i is edge i of G.
class LineTreeBijection {
 public:
  explicit LineTreeBijection(const DiGraph& g);
  LineTreeBijection(const DiGraph& g, EdgeOrder order);

  const DiGraph& graph() const { return *g_; }
  const DiGraph& line_graph() const { return line_.graph; }
  const EdgeOrder& order() const { return order_; }

  /// Line-graph edge (f, g), which exists iff t(f) = s(g).
  EdgeId line_edge(EdgeId f, EdgeId g) const;

  /// Repeatedly takes the smallest edge f with no copies left in its source
  /// list and no out-edge yet, pops the head g of the list at t(f), and adds
  /// (f, g); stops when the popped entry is Omega, making f the root.
  SpanningTree sigma(const TreeArray& a) const;

  /// Repeatedly removes the smallest leaf f of the tree and appends its
  /// parent to the list at t(f); the root is removed last and contributes
  /// Omega.
  TreeArray pi(const SpanningTree& tree) const;

 private:
  const DiGraph* g_;
  linetrees::LineGraph line_;
  EdgeOrder order_;
  std::vector<std::size_t> line_first_out_;
};

SpanningTree sigma(const DiGraph& g, const TreeArray& a, const EdgeOrder& order);
TreeArray pi(const DiGraph& g, const SpanningTree& line_tree, const EdgeOrder& order);

/// prod_v outdeg(v)^(indeg(v)-1) times kappa(G).
BigInt count_tree_arrays(const DiGraph& g);

/// Every tree array once: trees in enumerate_trees order, then proto lists
/// in lexicographic order (vertex by vertex, positions by edge id).
void for_each_tree_array(const DiGraph& g, const std::function<void(const TreeArray&)>& visit,
                         EnumerationLimit limit = {});
std::vector<TreeArray> enumerate_tree_arrays(const DiGraph& g, EnumerationLimit limit = {});

}  // namespace linetrees

#endif  // LINETREES_LINE_BIJECTION_HPP
