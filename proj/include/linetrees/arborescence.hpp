#ifndef LINETREES_ARBORESCENCE_HPP
#define LINETREES_ARBORESCENCE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linetrees/bigint.hpp"
#include "linetrees/digraph.hpp"
#include "linetrees/int_matrix.hpp"
#include "linetrees/polynomial.hpp"

namespace linetrees {

/// Oriented spanning tree: every non-root vertex keeps exactly one out-edge
/// and following out-edges from any vertex reaches the root.
struct SpanningTree {
  VertexId root;
  /// Indexed by vertex; empty at the root.
  std::vector<std::optional<EdgeId>> out_edge;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Reason `tree` is not a spanning tree of `g`, or nullopt if it is one.
std::optional<std::string> spanning_tree_error(const DiGraph& g, const SpanningTree& tree);
inline bool is_spanning_tree(const DiGraph& g, const SpanningTree& tree) {
  return !spanning_tree_error(g, tree);
}

/// In-degree of every vertex within the tree.
std::vector<std::size_t> tree_indegrees(const DiGraph& g, const SpanningTree& tree);

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps brute-force enumeration. A step is one candidate out-edge tried for
/// one vertex during the search.
struct EnumerationLimit {
  std::uint64_t max_steps = 1'000'000;
};

/// Visits every spanning tree, all roots, ordered by root and then
/// lexicographically by the out-edge chosen at each vertex in index order.
void for_each_spanning_tree(const DiGraph& g, const std::function<void(const SpanningTree&)>& visit,
                            EnumerationLimit limit = {}, std::optional<VertexId> only_root = std::nullopt);

std::vector<SpanningTree> enumerate_trees(const DiGraph& g, EnumerationLimit limit = {});

/// D - A with D the out-degree matrix; self-loops cancel.
IntMatrix out_laplacian(const DiGraph& g);

/// Number of spanning trees rooted at r, via the Matrix-Tree determinant.
BigInt count_trees_rooted(const DiGraph& g, VertexId r);
/// Spanning trees over all roots.
BigInt count_trees(const DiGraph& g);

/// Sum over trees (all roots) of the product of edge weights, via weighted
/// Matrix-Tree determinants.
BigInt weighted_tree_sum(const DiGraph& g, const std::vector<BigInt>& edge_weight);

/// Sum over all trees of the product of x_e over tree edges (variables are edge ids).
GenPoly kappa_edge(const DiGraph& g, EnumerationLimit limit = {});
/// Sum over all trees of the product of x_{t(e)} over tree edges (variables are vertex ids).
GenPoly kappa_vertex(const DiGraph& g, EnumerationLimit limit = {});

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// kappa_edge(G) * prod_v (sum_{s(e)=v} x_e)^(indeg(v)-1). Every vertex needs indeg >= 1.
GenPoly rhs_product(const DiGraph& g, EnumerationLimit limit = {});

struct IdentityWitness {
  Monomial monomial;
  BigInt lhs_coefficient;
  BigInt rhs_coefficient;
};

struct IdentityReport {
  bool holds = false;
  /// Vertex generating function of the line graph, with line-graph vertex
  /// variables renamed to the matching edge variables of G.
  GenPoly lhs{VarFamily::Edge};
  GenPoly rhs{VarFamily::Edge};
  /// First monomial (in monomial order) whose coefficients differ.
  std::optional<IdentityWitness> witness;
};

/// Exact monomial comparison of the vertex generating function of the line
/// graph against rhs_product(G).
IdentityReport verify_identity(const DiGraph& g, EnumerationLimit limit = {});

struct EvaluationReport {
  bool holds = false;
  std::size_t trials = 0;
  /// Values from the first failing trial, or the last trial if all agree.
  BigInt lhs;
  BigInt rhs;
};

/// Probabilistic check of the same identity: assigns pseudorandom integers
/// in [1, max_value] to the edge variables and compares both sides using
/// weighted determinants. No enumeration, so it scales past the expansion bound.
EvaluationReport verify_identity_by_evaluation(const DiGraph& g, std::uint64_t seed, std::size_t trials = 8,
                                               unsigned max_value = 97);

struct KnuthReport {
  bool holds = false;
  BigInt line_graph_trees;
  BigInt graph_trees;
  BigInt degree_factor;
};

/// kappa(LG) against kappa(G) * prod_v outdeg(v)^(indeg(v)-1), all counts by determinant.
KnuthReport knuth_check(const DiGraph& g);

}  // namespace linetrees

#endif  // LINETREES_ARBORESCENCE_HPP
