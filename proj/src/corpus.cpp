#include "linetrees/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace linetrees {

namespace {

using Matrix = std::vector<unsigned>;

bool is_canonical(const Matrix& m, std::size_t n, std::vector<std::size_t>& perm) {
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (std::size_t cell = 0; cell < n * n; ++cell) {
      unsigned relabeled = m[perm[cell / n] * n + perm[cell % n]];
      if (relabeled < m[cell]) return false;
      if (relabeled > m[cell]) break;
    }
  }
  return true;
}

CorpusEntry to_entry(const Matrix& m, std::size_t n) {
  std::vector<Edge> edges;
  std::string name = "g" + std::to_string(n) + ":";
  for (std::size_t cell = 0; cell < n * n; ++cell) {
    name += std::to_string(m[cell]);
    for (unsigned k = 0; k < m[cell]; ++k) edges.push_back({VertexId{cell / n}, VertexId{cell % n}});
  }
  return {name, DiGraph(n, std::move(edges))};
}

}  // namespace

std::vector<CorpusEntry> small_graph_classes(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    Matrix m(n * n, 0);
    std::vector<std::size_t> perm(n);
    std::vector<unsigned> colsum(n, 0);
    // Row-major fill with increasing values visits matrices in lexicographic order.
    auto fill = [&](auto&& self, std::size_t cell, std::size_t left) -> void {
      if (cell == n * n) {
        if (std::all_of(colsum.begin(), colsum.end(), [](unsigned c) { return c > 0; }) && is_canonical(m, n, perm)) {
          out.push_back(to_entry(m, n));
        }
        return;
      }
      // Prune once a column can no longer reach in-degree 1.
      if (cell >= n * (n - 1)) {
        std::size_t col = cell % n;
        for (std::size_t c = 0; c < col; ++c) {
          if (colsum[c] == 0) return;
        }
      }
      for (unsigned v = 0; v <= left; ++v) {
        m[cell] = v;
        colsum[cell % n] += v;
        self(self, cell + 1, left - v);
        colsum[cell % n] -= v;
      }
      m[cell] = 0;
    };
    fill(fill, 0, max_edges);
  }
  return out;
}

std::vector<CorpusEntry> build_corpus(const CorpusOptions& options) {
  std::vector<CorpusEntry> classes = small_graph_classes(options.max_vertices, options.max_edges);
  std::vector<CorpusEntry> out;
  std::mt19937_64 rng(options.seed);
  std::sample(classes.begin(), classes.end(), std::back_inserter(out), options.sample_size, rng);
  out.push_back({"DB_1(2)", debruijn(2, 1)});
  out.push_back({"DB_2(2)", debruijn(2, 2)});
  out.push_back({"Kautz_1(2)", kautz(2, 1)});
  return out;
}

}  // namespace linetrees
