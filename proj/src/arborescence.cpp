#include "linetrees/arborescence.hpp"

#include <random>

namespace linetrees {

std::optional<std::string> spanning_tree_error(const DiGraph& g, const SpanningTree& tree) {
  const std::size_t n = g.num_vertices();
  if (tree.out_edge.size() != n) return "tree has " + std::to_string(tree.out_edge.size()) + " entries, graph has " +
                                        std::to_string(n) + " vertices";
  if (tree.root.index() >= n) return "root out of range";
  for (std::size_t v = 0; v < n; ++v) {
    const auto& e = tree.out_edge[v];
    if (v == tree.root.index()) {
      if (e) return "root has an out-edge";
      continue;
    }
    if (!e) return "vertex " + g.vertex_name(VertexId{v}) + " has no out-edge";
    if (e->index() >= g.num_edges()) return "edge index out of range";
    if (g.source(*e).index() != v) return "edge " + g.edge_name(*e) + " does not leave " + g.vertex_name(VertexId{v});
  }
  // 0 = unknown, 1 = on current walk, 2 = reaches root
  std::vector<char> state(n, 0);
  state[tree.root.index()] = 2;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = g.target(*tree.out_edge[v]).index();
    }
    if (state[v] == 1) return "tree contains a cycle through " + g.vertex_name(VertexId{v});
    for (auto w : walk) state[w] = 2;
  }
  return std::nullopt;
}

std::vector<std::size_t> tree_indegrees(const DiGraph& g, const SpanningTree& tree) {
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  for (const auto& e : tree.out_edge) {
    if (e) ++indeg[g.target(*e).index()];
  }
  return indeg;
}

void for_each_spanning_tree(const DiGraph& g, const std::function<void(const SpanningTree&)>& visit,
                            EnumerationLimit limit, std::optional<VertexId> only_root) {
  const std::size_t n = g.num_vertices();
  std::uint64_t steps = 0;
  SpanningTree tree;
  tree.out_edge.assign(n, std::nullopt);

  // Adding v -> w closes a cycle iff the out-edge chain from w (through
  // already assigned vertices) returns to v.
  auto closes_cycle = [&](std::size_t v, std::size_t w) {
    while (w != v) {
      if (w == tree.root.index() || !tree.out_edge[w]) return false;
      w = g.target(*tree.out_edge[w]).index();
    }
    return true;
  };

  auto assign = [&](auto&& self, std::size_t v) -> void {
    if (v == tree.root.index()) ++v;
    if (v >= n) {
      visit(tree);
      return;
    }
    for (EdgeId e : g.out_edges(VertexId{v})) {
      if (++steps > limit.max_steps) {
        throw EnumerationLimitExceeded("spanning tree enumeration exceeded " + std::to_string(limit.max_steps) +
                                       " steps");
      }
      if (closes_cycle(v, g.target(e).index())) continue;
      tree.out_edge[v] = e;
      self(self, v + 1);
    }
    tree.out_edge[v].reset();
  };

  for (std::size_t r = 0; r < n; ++r) {
    if (only_root && only_root->index() != r) continue;
    tree.root = VertexId{r};
    assign(assign, 0);
  }
}

std::vector<SpanningTree> enumerate_trees(const DiGraph& g, EnumerationLimit limit) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); }, limit);
  return out;
}

IntMatrix out_laplacian(const DiGraph& g) {
  const std::size_t n = g.num_vertices();
  IntMatrix m(n, n);
  for (const auto& e : g.edges()) {
    m(e.source.index(), e.source.index()) += 1;
    m(e.source.index(), e.target.index()) -= 1;
  }
  return m;
}

BigInt count_trees_rooted(const DiGraph& g, VertexId r) {
  BigInt d = determinant(out_laplacian(g).minor(r.index(), r.index()));
  return abs(d);
}

BigInt count_trees(const DiGraph& g) {
  IntMatrix lap = out_laplacian(g);
  BigInt total = 0;
  for (std::size_t r = 0; r < g.num_vertices(); ++r) total += abs(determinant(lap.minor(r, r)));
  return total;
}

BigInt weighted_tree_sum(const DiGraph& g, const std::vector<BigInt>& edge_weight) {
  const std::size_t n = g.num_vertices();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edges()[i];
    m(e.source.index(), e.source.index()) += edge_weight[i];
    m(e.source.index(), e.target.index()) -= edge_weight[i];
  }
  BigInt total = 0;
  for (std::size_t r = 0; r < n; ++r) total += determinant(m.minor(r, r));
  return total;
}

GenPoly kappa_edge(const DiGraph& g, EnumerationLimit limit) {
  GenPoly p(VarFamily::Edge);
  std::vector<std::uint32_t> vars;
  for_each_spanning_tree(
      g,
      [&](const SpanningTree& t) {
        vars.clear();
        for (const auto& e : t.out_edge) {
          if (e) vars.push_back(e->value);
        }
        p.add_term(Monomial(vars));
      },
      limit);
  return p;
}

GenPoly kappa_vertex(const DiGraph& g, EnumerationLimit limit) {
  GenPoly p(VarFamily::Vertex);
  std::vector<std::uint32_t> vars;
  for_each_spanning_tree(
      g,
      [&](const SpanningTree& t) {
        vars.clear();
        for (const auto& e : t.out_edge) {
          if (e) vars.push_back(g.target(*e).value);
        }
        p.add_term(Monomial(vars));
      },
      limit);
  return p;
}

namespace {

void require_positive_indegree(const DiGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.indeg(VertexId{v}) == 0) {
      throw PreconditionError("vertex " + g.vertex_name(VertexId{v}) + " has indegree 0");
    }
  }
}

}  // namespace

GenPoly rhs_product(const DiGraph& g, EnumerationLimit limit) {
  require_positive_indegree(g);
  GenPoly result = kappa_edge(g, limit);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexId vid{v};
    if (g.indeg(vid) == 1) continue;
    std::vector<std::uint32_t> outs;
    for (EdgeId e : g.out_edges(vid)) outs.push_back(e.value);
    result = result * GenPoly::linear(VarFamily::Edge, outs).pow(static_cast<unsigned>(g.indeg(vid) - 1));
  }
  return result;
}

IdentityReport verify_identity(const DiGraph& g, EnumerationLimit limit) {
  require_positive_indegree(g);
  LineGraph lg = line_graph(g);
  IdentityReport report;
  report.lhs = kappa_vertex(lg.graph, limit).renamed(
      [&](std::uint32_t v) { return lg.map.backward(VertexId{v}).value; }, VarFamily::Edge);
  report.rhs = rhs_product(g, limit);
  report.holds = report.lhs == report.rhs;
  if (!report.holds) {
    // Walk both term maps in monomial order to find the first disagreement.
    auto a = report.lhs.terms().begin(), ae = report.lhs.terms().end();
    auto b = report.rhs.terms().begin(), be = report.rhs.terms().end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        report.witness = IdentityWitness{a->first, a->second, 0};
        break;
      }
      if (a == ae || b->first < a->first) {
        report.witness = IdentityWitness{b->first, 0, b->second};
        break;
      }
      if (a->second != b->second) {
        report.witness = IdentityWitness{a->first, a->second, b->second};
        break;
      }
      ++a;
      ++b;
    }
  }
  return report;
}

EvaluationReport verify_identity_by_evaluation(const DiGraph& g, std::uint64_t seed, std::size_t trials,
                                               unsigned max_value) {
  require_positive_indegree(g);
  LineGraph lg = line_graph(g);
  std::mt19937_64 rng(seed);
  EvaluationReport report;
  report.holds = true;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<BigInt> x(g.num_edges());
    for (auto& xi : x) xi = static_cast<unsigned long>(rng() % max_value + 1);

    // In the line graph, edge (e,f) carries the weight of its target f.
    std::vector<BigInt> lg_weight(lg.graph.num_edges());
    for (std::size_t i = 0; i < lg.graph.num_edges(); ++i) {
      lg_weight[i] = x[lg.map.backward(lg.graph.edges()[i].target).index()];
    }
    BigInt lhs = weighted_tree_sum(lg.graph, lg_weight);

    BigInt rhs = weighted_tree_sum(g, x);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      BigInt s = 0;
      for (EdgeId e : g.out_edges(VertexId{v})) s += x[e.index()];
      rhs *= pow(s, g.indeg(VertexId{v}) - 1);
    }
    report.trials = t + 1;
    report.lhs = lhs;
    report.rhs = rhs;
    if (lhs != rhs) {
      report.holds = false;
      break;
    }
  }
  return report;
}

KnuthReport knuth_check(const DiGraph& g) {
  require_positive_indegree(g);
  KnuthReport r;
  r.line_graph_trees = count_trees(line_graph(g).graph);
  r.graph_trees = count_trees(g);
  r.degree_factor = 1;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexId vid{v};
    r.degree_factor *= pow(g.outdeg(vid), g.indeg(vid) - 1);
  }
  r.holds = r.line_graph_trees == r.graph_trees * r.degree_factor;
  return r;
}

}  // namespace linetrees
