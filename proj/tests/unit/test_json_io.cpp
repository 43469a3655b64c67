#include <gtest/gtest.h>

#include "linetrees/json_io.hpp"

using namespace linetrees;

TEST(GraphJson, RoundTrip) {
  for (const DiGraph& g : {debruijn(2, 2), kautz(3, 1)}) {
    json j = graph_to_json(g);
    DiGraph back = graph_from_json(j);
    EXPECT_TRUE(same_labeled_structure(back, g));
    EXPECT_EQ(graph_to_json(back), j);
  }
  json tiny = json::parse(R"({"vertices": ["a", "b"], "edges": [[0, 1], [1, 0, "back"]]})");
  DiGraph g = graph_from_json(tiny);
  EXPECT_EQ(g.edge_name(EdgeId{0u}), "e0");
  EXPECT_EQ(g.edge_name(EdgeId{1u}), "back");
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": ["a"]})")), JsonShapeError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [[0]]})")), JsonShapeError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [[0, 3]]})")), GraphError);
}

TEST(TreeArrayJson, RoundTripOverAllArrays) {
  DiGraph g = kautz(2, 1);
  for (const auto& a : enumerate_tree_arrays(g)) {
    json j = tree_array_to_json(g, a);
    EXPECT_EQ(tree_array_from_json(g, j), a);
  }
  json sample = tree_array_to_json(g, enumerate_tree_arrays(g).front());
  EXPECT_TRUE(sample["lists"].is_object());
  EXPECT_EQ(sample["lists"][sample["root"].get<std::string>()].back(), kOmegaToken);
}

TEST(TreeArrayJson, UnknownNames) {
  DiGraph g = debruijn(2, 1);
  EXPECT_THROW(tree_array_from_json(g, json::parse(R"({"root": "7", "lists": {}})")), JsonShapeError);
  EXPECT_THROW(tree_array_from_json(g, json::parse(R"({"root": "0", "lists": {"0": ["zz"]}})")), JsonShapeError);
}

TEST(LineTreeJson, RoundTripOverAllTrees) {
  DiGraph g = debruijn(2, 1);
  LineTreeBijection bij(g);
  for (const auto& t : enumerate_trees(bij.line_graph())) {
    json j = line_tree_to_json(bij, t);
    EXPECT_EQ(line_tree_from_json(bij, j), t);
  }
  EXPECT_THROW(line_tree_from_json(bij, json::parse(R"({"root": "00", "edges": [["00", "10"]]})")), JsonShapeError);
}

TEST(SpanningTreeJson, RoundTrip) {
  DiGraph g = kautz(2, 2);
  for (const auto& t : enumerate_trees(g)) EXPECT_EQ(spanning_tree_from_json(g, spanning_tree_to_json(g, t)), t);
}

TEST(GroupJson, Shape) {
  json j = group_to_json(critical_group(kautz(2, 2)));
  EXPECT_EQ(j["invariant_factors"], json::parse("[2, 6]"));
  EXPECT_EQ(j["order"], "12");
  EXPECT_EQ(big_to_json(pow(2ul, 80ul)), "1208925819614629174706176");
}
