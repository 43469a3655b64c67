#ifndef LINETREES_CORPUS_HPP
#define LINETREES_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "linetrees/digraph.hpp"

namespace linetrees {

struct CorpusOptions {
  std::size_t max_vertices = 4;
  std::size_t max_edges = 8;
  std::size_t sample_size = 200;
  std::uint64_t seed = 20240607;
};

struct CorpusEntry {
  std::string name;
  DiGraph graph;
};

/// One representative per isomorphism class of multigraphs (loops and
/// parallel edges allowed) with 1..max_vertices vertices, at most max_edges
/// edges and every in-degree >= 1. The representative has the
/// lexicographically smallest multiplicity matrix among all relabelings;
/// its edges are listed row by row. Classes come out sorted by vertex count,
/// then by that matrix.
std::vector<CorpusEntry> small_graph_classes(std::size_t max_vertices, std::size_t max_edges);

/// A fixed-seed sample of small_graph_classes (kept in class order), then
/// DB_1(2), DB_2(2) and Kautz_1(2).
std::vector<CorpusEntry> build_corpus(const CorpusOptions& options = {});

}  // namespace linetrees

#endif  // LINETREES_CORPUS_HPP
