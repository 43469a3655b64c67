#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "linetrees/corpus.hpp"

using namespace linetrees;

TEST(Corpus, HandCountedClasses) {
  // One vertex: 1 or 2 loops. Two vertices and two edges: 0->0 + 0->1,
  // 0->0 + 1->1, and the 2-cycle.
  EXPECT_EQ(small_graph_classes(1, 2).size(), 2u);
  EXPECT_EQ(small_graph_classes(2, 2).size(), 5u);
}

// Orbit sizes of the class representatives must add up to the number of
// labeled multiplicity matrices, counted directly.
TEST(Corpus, OrbitsCoverEveryLabeledGraphOnce) {
  const std::size_t max_edges = 4;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t orbit_total = 0;
    std::set<std::vector<unsigned>> all_relabelings;
    for (const auto& entry : small_graph_classes(3, max_edges)) {
      const DiGraph& g = entry.graph;
      if (g.num_vertices() != n) continue;
      std::vector<unsigned> m(n * n, 0);
      for (const auto& e : g.edges()) ++m[e.source.index() * n + e.target.index()];
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::set<std::vector<unsigned>> orbit;
      do {
        std::vector<unsigned> relabeled(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) relabeled[perm[i] * n + perm[j]] = m[i * n + j];
        }
        orbit.insert(relabeled);
      } while (std::next_permutation(perm.begin(), perm.end()));
      orbit_total += orbit.size();
      all_relabelings.insert(orbit.begin(), orbit.end());
    }
    EXPECT_EQ(all_relabelings.size(), orbit_total) << "two classes share a relabeling, n = " << n;

    std::size_t labeled = 0;
    std::vector<unsigned> cells(n * n, 0);
    auto count = [&](auto&& self, std::size_t cell, std::size_t left) -> void {
      if (cell == n * n) {
        for (std::size_t c = 0; c < n; ++c) {
          unsigned in = 0;
          for (std::size_t r = 0; r < n; ++r) in += cells[r * n + c];
          if (in == 0) return;
        }
        ++labeled;
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        cells[cell] = v;
        self(self, cell + 1, left - v);
      }
      cells[cell] = 0;
    };
    count(count, 0, max_edges);
    EXPECT_EQ(orbit_total, labeled) << "n = " << n;
  }
}

TEST(Corpus, ClassesSatisfyTheFilters) {
  std::set<std::string> names;
  for (const auto& entry : small_graph_classes(4, 5)) {
    const DiGraph& g = entry.graph;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) EXPECT_GE(g.indeg(VertexId{v}), 1u);
    EXPECT_LE(g.num_edges(), 5u);
    names.insert(entry.name);
  }
  EXPECT_EQ(names.size(), small_graph_classes(4, 5).size());
}

TEST(Corpus, FixedSeedSample) {
  auto a = build_corpus();
  auto b = build_corpus();
  ASSERT_EQ(a.size(), 203u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
  EXPECT_EQ(a[200].name, "DB_1(2)");
  EXPECT_EQ(a[202].name, "Kautz_1(2)");
  CorpusOptions other;
  other.seed = 7;
  EXPECT_NE(build_corpus(other)[0].name + build_corpus(other)[1].name, a[0].name + a[1].name);
}
