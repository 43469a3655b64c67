#include "linetrees/line_bijection.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace linetrees {

namespace {

using MinRankQueue = std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>>;

}  // namespace

std::optional<std::string> tree_array_error(const DiGraph& g, const TreeArray& a) {
  const std::size_t n = g.num_vertices();
  if (a.lists.size() != n) return "tree array has " + std::to_string(a.lists.size()) + " lists for " +
                                  std::to_string(n) + " vertices";
  if (a.root.index() >= n) return "root out of range";

  std::size_t omegas = 0;
  for (std::size_t v = 0; v < n; ++v) {
    VertexId vid{v};
    const auto& list = a.lists[v];
    if (list.size() != g.indeg(vid)) {
      return "list of " + g.vertex_name(vid) + " has length " + std::to_string(list.size()) + ", indegree is " +
             std::to_string(g.indeg(vid));
    }
    for (const auto& entry : list) {
      if (entry.is_omega()) {
        ++omegas;
        continue;
      }
      if (entry.edge().index() >= g.num_edges()) return "edge index out of range";
      if (g.source(entry.edge()) != vid) {
        return "edge " + g.edge_name(entry.edge()) + " in the list of " + g.vertex_name(vid) + " does not leave it";
      }
    }
  }
  if (omegas != 1) return "tree array must contain exactly one OMEGA, found " + std::to_string(omegas);
  const auto& root_list = a.lists[a.root.index()];
  if (root_list.empty() || !root_list.back().is_omega()) return "OMEGA must be the last entry of the root list";

  if (auto err = spanning_tree_error(g, last_entries_tree(g, a))) return "last entries are not a spanning tree: " + *err;
  return std::nullopt;
}

SpanningTree last_entries_tree(const DiGraph& g, const TreeArray& a) {
  SpanningTree t;
  t.root = a.root;
  t.out_edge.assign(g.num_vertices(), std::nullopt);
  for (std::size_t v = 0; v < a.lists.size() && v < g.num_vertices(); ++v) {
    if (v == a.root.index() || a.lists[v].empty() || a.lists[v].back().is_omega()) continue;
    t.out_edge[v] = a.lists[v].back().edge();
  }
  return t;
}

std::vector<std::size_t> entry_counts(const DiGraph& g, const TreeArray& a) {
  std::vector<std::size_t> count(g.num_edges(), 0);
  for (std::size_t v = 0; v < a.lists.size(); ++v) {
    for (const auto& entry : a.lists[v]) {
      if (!entry.is_omega() && g.source(entry.edge()).index() == v) ++count[entry.edge().index()];
    }
  }
  return count;
}

TreeArray make_tree_array(const DiGraph& g, const SpanningTree& tree, const ProtoLists& proto) {
  if (auto err = spanning_tree_error(g, tree)) throw InvalidTreeArray("invalid spanning tree: " + *err);
  if (proto.size() != g.num_vertices()) throw InvalidTreeArray("proto lists do not cover every vertex");
  TreeArray a;
  a.root = tree.root;
  a.lists.resize(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexId vid{v};
    if (g.indeg(vid) == 0) throw PreconditionError("vertex " + g.vertex_name(vid) + " has indegree 0");
    if (proto[v].size() != g.indeg(vid) - 1) {
      throw InvalidTreeArray("proto list of " + g.vertex_name(vid) + " must have indeg - 1 entries");
    }
    for (EdgeId e : proto[v]) {
      if (e.index() >= g.num_edges() || g.source(e) != vid) {
        throw InvalidTreeArray("proto list of " + g.vertex_name(vid) + " holds an edge that does not leave it");
      }
      a.lists[v].push_back(ArrayEntry::of(e));
    }
    a.lists[v].push_back(vid == tree.root ? ArrayEntry::omega() : ArrayEntry::of(*tree.out_edge[v]));
  }
  return a;
}

EdgeOrder EdgeOrder::identity(std::size_t num_edges) {
  std::vector<EdgeId> seq(num_edges);
  for (std::size_t i = 0; i < num_edges; ++i) seq[i] = EdgeId{i};
  return from_sequence(std::move(seq));
}

EdgeOrder EdgeOrder::from_sequence(std::vector<EdgeId> sequence) {
  EdgeOrder o;
  o.rank_.assign(sequence.size(), 0);
  std::vector<bool> seen(sequence.size(), false);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    auto e = sequence[i].index();
    if (e >= sequence.size() || seen[e]) throw std::invalid_argument("edge order must list every edge once");
    seen[e] = true;
    o.rank_[e] = static_cast<std::uint32_t>(i);
  }
  o.sequence_ = std::move(sequence);
  return o;
}

EdgeOrder EdgeOrder::shuffled(std::size_t num_edges, std::uint64_t seed) {
  std::vector<EdgeId> seq(num_edges);
  for (std::size_t i = 0; i < num_edges; ++i) seq[i] = EdgeId{i};
  std::mt19937_64 rng(seed);
  for (std::size_t i = num_edges; i > 1; --i) std::swap(seq[i - 1], seq[rng() % i]);
  return from_sequence(std::move(seq));
}

LineTreeBijection::LineTreeBijection(const DiGraph& g) : LineTreeBijection(g, EdgeOrder::identity(g.num_edges())) {}

LineTreeBijection::LineTreeBijection(const DiGraph& g, EdgeOrder order)
    : g_(&g), line_(linetrees::line_graph(g)), order_(std::move(order)) {
  if (order_.size() != g.num_edges()) throw std::invalid_argument("edge order size does not match the graph");
  line_first_out_.resize(g.num_edges());
  std::size_t next = 0;
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    line_first_out_[f] = next;
    next += g.outdeg(g.target(EdgeId{f}));
  }
}

EdgeId LineTreeBijection::line_edge(EdgeId f, EdgeId g) const {
  if (g_->target(f) != g_->source(g)) throw std::invalid_argument("edges are not consecutive");
  return EdgeId{line_first_out_[f.index()] + g_->out_position(g)};
}

SpanningTree LineTreeBijection::sigma(const TreeArray& a) const {
  const DiGraph& g = *g_;
  if (auto err = tree_array_error(g, a)) throw InvalidTreeArray(*err);

  std::vector<std::size_t> count = entry_counts(g, a);
  std::vector<std::size_t> head(g.num_vertices(), 0);
  std::vector<bool> has_out(g.num_edges(), false);

  SpanningTree out;
  out.out_edge.assign(g.num_edges(), std::nullopt);

  MinRankQueue ready;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (count[e] == 0) ready.push(order_.rank(EdgeId{e}));
  }

  for (std::size_t added = 0;; ++added) {
    if (ready.empty()) throw std::logic_error("sigma: no edge is ready (well-definedness violated)");
    EdgeId f = order_.sequence()[ready.top()];
    ready.pop();
    auto v = g.target(f).index();
    if (head[v] >= a.lists[v].size()) throw std::logic_error("sigma: popped an exhausted list");
    const ArrayEntry& popped = a.lists[v][head[v]++];
    if (popped.is_omega()) {
      if (added + 1 != g.num_edges()) throw std::logic_error("sigma: stopped before every edge had a parent");
      out.root = VertexId{f.index()};
      return out;
    }
    EdgeId next = popped.edge();
    out.out_edge[f.index()] = line_edge(f, next);
    has_out[f.index()] = true;
    if (--count[next.index()] == 0 && !has_out[next.index()]) ready.push(order_.rank(next));
  }
}

TreeArray LineTreeBijection::pi(const SpanningTree& tree) const {
  const DiGraph& g = *g_;
  if (auto err = spanning_tree_error(line_.graph, tree)) {
    throw InvalidLineTree("not a spanning tree of the line graph: " + *err);
  }
  auto indeg = tree_indegrees(line_.graph, tree);
  MinRankQueue leaves;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (indeg[e] == 0 && e != tree.root.index()) leaves.push(order_.rank(EdgeId{e}));
  }

  TreeArray a;
  a.lists.resize(g.num_vertices());
  while (!leaves.empty()) {
    EdgeId f = order_.sequence()[leaves.top()];
    leaves.pop();
    EdgeId parent = line_.map.backward(line_.graph.target(*tree.out_edge[f.index()]));
    a.lists[g.target(f).index()].push_back(ArrayEntry::of(parent));
    if (--indeg[parent.index()] == 0 && parent.index() != tree.root.index()) leaves.push(order_.rank(parent));
  }
  EdgeId root = line_.map.backward(tree.root);
  a.root = g.target(root);
  a.lists[a.root.index()].push_back(ArrayEntry::omega());
  return a;
}

SpanningTree sigma(const DiGraph& g, const TreeArray& a, const EdgeOrder& order) {
  return LineTreeBijection(g, order).sigma(a);
}

TreeArray pi(const DiGraph& g, const SpanningTree& line_tree, const EdgeOrder& order) {
  return LineTreeBijection(g, order).pi(line_tree);
}

BigInt count_tree_arrays(const DiGraph& g) {
  BigInt total = count_trees(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    VertexId vid{v};
    if (g.indeg(vid) == 0) return 0;
    total *= pow(g.outdeg(vid), g.indeg(vid) - 1);
  }
  return total;
}

void for_each_tree_array(const DiGraph& g, const std::function<void(const TreeArray&)>& visit,
                         EnumerationLimit limit) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.indeg(VertexId{v}) == 0) throw PreconditionError("vertex " + g.vertex_name(VertexId{v}) + " has indegree 0");
  }
  if (count_tree_arrays(g) > limit.max_steps) {
    throw EnumerationLimitExceeded("tree array count exceeds " + std::to_string(limit.max_steps));
  }

  // One slot per proto-list position, vertex by vertex.
  std::vector<std::size_t> slot_vertex;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t k = 1; k < g.indeg(VertexId{v}); ++k) slot_vertex.push_back(v);
  }
  for (auto v : slot_vertex) {
    if (g.outdeg(VertexId{v}) == 0) return;
  }

  for_each_spanning_tree(
      g,
      [&](const SpanningTree& tree) {
        std::vector<std::size_t> choice(slot_vertex.size(), 0);
        for (;;) {
          ProtoLists proto(g.num_vertices());
          for (std::size_t s = 0; s < slot_vertex.size(); ++s) {
            auto v = slot_vertex[s];
            proto[v].push_back(g.out_edges(VertexId{v})[choice[s]]);
          }
          visit(make_tree_array(g, tree, proto));

          // Odometer with the last slot fastest.
          std::size_t s = slot_vertex.size();
          while (s > 0) {
            --s;
            if (++choice[s] < g.outdeg(VertexId{slot_vertex[s]})) break;
            choice[s] = 0;
            if (s == 0) return;
          }
          if (slot_vertex.empty()) return;
        }
      },
      limit);
}

std::vector<TreeArray> enumerate_tree_arrays(const DiGraph& g, EnumerationLimit limit) {
  std::vector<TreeArray> out;
  for_each_tree_array(g, [&](const TreeArray& a) { out.push_back(a); }, limit);
  return out;
}

}  // namespace linetrees
