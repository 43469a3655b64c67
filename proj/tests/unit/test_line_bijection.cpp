#include <gtest/gtest.h>

#include <set>

#include "linetrees/corpus.hpp"
#include "linetrees/line_bijection.hpp"
#include "oracles.hpp"

using namespace linetrees;

namespace {

DiGraph two_cycle() {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 0}};
  return build_graph(e);
}

DiGraph self_loop() {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 0}};
  return build_graph(e);
}

std::string key(const TreeArray& a) {
  std::string out = std::to_string(a.root.index());
  for (const auto& list : a.lists) {
    out += '|';
    for (const auto& entry : list) out += entry.is_omega() ? "O," : std::to_string(entry.edge().index()) + ",";
  }
  return out;
}

const EdgeId e0{0u};
const EdgeId e1{1u};

}  // namespace

TEST(MakeTreeArray, Examples) {
  DiGraph g = two_cycle();
  SpanningTree t{VertexId{0u}, {std::nullopt, e1}};
  TreeArray a = make_tree_array(g, t, {{}, {}});
  EXPECT_EQ(a.lists[0], std::vector<ArrayEntry>{ArrayEntry::omega()});
  EXPECT_EQ(a.lists[1], std::vector<ArrayEntry>{ArrayEntry::of(e1)});
  EXPECT_FALSE(tree_array_error(g, a));

  TreeArray loop = make_tree_array(self_loop(), {VertexId{0u}, {std::nullopt}}, {{}});
  EXPECT_EQ(loop.lists[0], std::vector<ArrayEntry>{ArrayEntry::omega()});

  std::vector<std::pair<std::size_t, std::size_t>> source{{0, 1}, {1, 1}};
  EXPECT_THROW(make_tree_array(build_graph(source), {VertexId{1u}, {e0, std::nullopt}}, {{}, {}}), PreconditionError);
}

TEST(TreeArrayError, Violations) {
  DiGraph g = two_cycle();
  TreeArray ok{VertexId{0u}, {{ArrayEntry::omega()}, {ArrayEntry::of(e1)}}};
  EXPECT_FALSE(tree_array_error(g, ok));
  TreeArray wrong_source{VertexId{0u}, {{ArrayEntry::omega()}, {ArrayEntry::of(e0)}}};
  EXPECT_TRUE(tree_array_error(g, wrong_source));
  TreeArray two_omegas{VertexId{0u}, {{ArrayEntry::omega()}, {ArrayEntry::omega()}}};
  EXPECT_TRUE(tree_array_error(g, two_omegas));
  TreeArray too_long{VertexId{0u}, {{ArrayEntry::of(e0), ArrayEntry::omega()}, {ArrayEntry::of(e1)}}};
  EXPECT_TRUE(tree_array_error(g, too_long));
  EXPECT_THROW(LineTreeBijection(g).sigma(wrong_source), InvalidTreeArray);
}

TEST(Sigma, Examples) {
  DiGraph g = two_cycle();
  LineTreeBijection bij(g);
  TreeArray a{VertexId{0u}, {{ArrayEntry::omega()}, {ArrayEntry::of(e1)}}};
  SpanningTree t = bij.sigma(a);
  EXPECT_EQ(t.root, VertexId{1u});
  ASSERT_TRUE(t.out_edge[0]);
  EXPECT_EQ(bij.line_graph().source(*t.out_edge[0]), VertexId{0u});
  EXPECT_EQ(bij.line_graph().target(*t.out_edge[0]), VertexId{1u});
  EXPECT_EQ(bij.pi(t), a);

  DiGraph loop = self_loop();
  LineTreeBijection loop_bij(loop);
  TreeArray only{VertexId{0u}, {{ArrayEntry::omega()}}};
  SpanningTree empty = loop_bij.sigma(only);
  EXPECT_EQ(empty.root, VertexId{0u});
  EXPECT_FALSE(empty.out_edge[0]);
  EXPECT_EQ(loop_bij.pi(empty), only);
}

TEST(Pi, RejectsNonTrees) {
  DiGraph g = two_cycle();
  LineTreeBijection bij(g);
  SpanningTree bad{VertexId{1u}, {std::nullopt, std::nullopt}};
  EXPECT_THROW(bij.pi(bad), InvalidLineTree);
}

TEST(EdgeOrder, Construction) {
  EdgeOrder id = EdgeOrder::identity(4);
  EXPECT_EQ(id.rank(EdgeId{3u}), 3u);
  EdgeOrder seq = EdgeOrder::from_sequence({EdgeId{2u}, EdgeId{0u}, EdgeId{1u}});
  EXPECT_EQ(seq.rank(EdgeId{2u}), 0u);
  EXPECT_EQ(seq.rank(EdgeId{1u}), 2u);
  EXPECT_THROW(EdgeOrder::from_sequence({EdgeId{0u}, EdgeId{0u}}), std::invalid_argument);
  EdgeOrder a = EdgeOrder::shuffled(10, 5);
  EdgeOrder b = EdgeOrder::shuffled(10, 5);
  EXPECT_EQ(a.sequence(), b.sequence());
  std::set<EdgeId> all(a.sequence().begin(), a.sequence().end());
  EXPECT_EQ(all.size(), 10u);
}

TEST(TreeArrays, CountsMatchGenerationOracle) {
  EXPECT_EQ(enumerate_tree_arrays(two_cycle()).size(), 2u);
  EXPECT_EQ(enumerate_tree_arrays(debruijn(2, 1)).size(), 8u);
  EXPECT_EQ(enumerate_tree_arrays(kautz(2, 1)).size(), 72u);
  for (const auto& entry : small_graph_classes(3, 6)) {
    const DiGraph& g = entry.graph;
    auto arrays = enumerate_tree_arrays(g);
    EXPECT_EQ(static_cast<std::int64_t>(arrays.size()),
              oracle::tree_arrays(static_cast<int>(g.num_vertices()), oracle::edges_of(g)))
        << entry.name;
    EXPECT_EQ(count_tree_arrays(g), arrays.size()) << entry.name;
    for (const auto& a : arrays) EXPECT_FALSE(tree_array_error(g, a)) << entry.name;
    std::set<std::string> distinct;
    for (const auto& a : arrays) distinct.insert(key(a));
    EXPECT_EQ(distinct.size(), arrays.size()) << entry.name;
  }
}

TEST(TreeArrays, BoundIsEnforced) {
  EXPECT_THROW(enumerate_tree_arrays(debruijn(2, 3), {100}), EnumerationLimitExceeded);
}

// pi(sigma(A)) = A, sigma(pi(T)) = T, and the in-degree of e in sigma(A)
// equals the number of times e is listed, under several edge orders.
TEST(Bijection, ExhaustiveRoundTripOnClasses) {
  for (const auto& entry : small_graph_classes(3, 6)) {
    const DiGraph& g = entry.graph;
    for (std::uint64_t seed : {0ull, 11ull, 22ull, 33ull}) {
      EdgeOrder order = seed ? EdgeOrder::shuffled(g.num_edges(), seed) : EdgeOrder::identity(g.num_edges());
      LineTreeBijection bij(g, order);
      std::set<oracle::Tree> images;
      for (const auto& a : enumerate_tree_arrays(g)) {
        SpanningTree t = bij.sigma(a);
        ASSERT_TRUE(is_spanning_tree(bij.line_graph(), t)) << entry.name;
        EXPECT_EQ(bij.pi(t), a) << entry.name;
        EXPECT_EQ(tree_indegrees(bij.line_graph(), t), entry_counts(g, a)) << entry.name;
        std::vector<int> edges;
        for (const auto& e : t.out_edge) {
          if (e) edges.push_back(static_cast<int>(e->index()));
        }
        images.insert({static_cast<int>(t.root.index()), edges});
      }
      auto line_trees = enumerate_trees(bij.line_graph());
      EXPECT_EQ(images.size(), line_trees.size()) << entry.name;
      for (const auto& t : line_trees) EXPECT_EQ(bij.sigma(bij.pi(t)), t) << entry.name;
    }
  }
}

TEST(Bijection, FreeFunctionsMatchClass) {
  DiGraph g = debruijn(2, 1);
  EdgeOrder order = EdgeOrder::shuffled(g.num_edges(), 3);
  LineTreeBijection bij(g, order);
  for (const auto& a : enumerate_tree_arrays(g)) {
    SpanningTree t = sigma(g, a, order);
    EXPECT_EQ(t, bij.sigma(a));
    EXPECT_EQ(pi(g, t, order), a);
  }
}
