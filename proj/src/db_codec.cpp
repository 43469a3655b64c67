#include "linetrees/db_codec.hpp"

#include <algorithm>
#include <memory>

#include "linetrees/line_bijection.hpp"

namespace linetrees {

namespace {

constexpr unsigned kMaxDegree = 24;

void check_bits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') throw CodecError("bit strings may only contain '0' and '1'");
  }
}

std::size_t window(std::string_view bits, std::size_t start, unsigned n) {
  std::size_t w = 0;
  for (unsigned j = 0; j < n; ++j) w = (w << 1) | static_cast<std::size_t>(bits[(start + j) % bits.size()] - '0');
  return w;
}

// Binary de Bruijn graphs DB_1(2) .. DB_n(2) with the bijection for each
// DB_k(2) -> DB_{k+1}(2) step. Vertex w of DB_k(2) is w's binary word; its
// zero edge is edge 2w and its one edge is edge 2w+1.
class DeBruijnTower {
 public:
  explicit DeBruijnTower(unsigned n) {
    for (unsigned k = 1; k <= n; ++k) graphs_.push_back(std::make_unique<DiGraph>(debruijn(2, k)));
    for (unsigned k = 1; k < n; ++k) {
      steps_.push_back(std::make_unique<LineTreeBijection>(graph(k)));
      if (!(steps_.back()->line_graph().edges().size() == graph(k + 1).num_edges() &&
            std::equal(graph(k + 1).edges().begin(), graph(k + 1).edges().end(),
                       steps_.back()->line_graph().edges().begin()))) {
        throw std::logic_error("line graph of DB_k(2) is not indexed like DB_{k+1}(2)");
      }
    }
  }

  const DiGraph& graph(unsigned k) const { return *graphs_[k - 1]; }
  // Bijection between tree arrays of DB_k(2) and spanning trees of DB_{k+1}(2).
  const LineTreeBijection& step(unsigned k) const { return *steps_[k - 1]; }

 private:
  std::vector<std::unique_ptr<DiGraph>> graphs_;
  std::vector<std::unique_ptr<LineTreeBijection>> steps_;
};

EdgeId zero_edge(std::size_t w) {
  return EdgeId{2 * w};
}

EdgeId one_edge(std::size_t w) {
  return EdgeId{2 * w + 1};
}

}  // namespace

bool is_de_bruijn(std::string_view bits, unsigned n) {
  if (n == 0 || n > kMaxDegree) throw CodecError("degree must be between 1 and " + std::to_string(kMaxDegree));
  if (bits.size() != (std::size_t{1} << n)) {
    throw CodecError("expected " + std::to_string(std::size_t{1} << n) + " bits, got " + std::to_string(bits.size()));
  }
  check_bits(bits);
  std::vector<bool> seen(bits.size(), false);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto w = window(bits, i, n);
    if (seen[w]) return false;
    seen[w] = true;
  }
  return true;
}

DeBruijnSequence make_sequence(std::string_view bits, unsigned n) {
  if (!is_de_bruijn(bits, n)) throw CodecError("not a de Bruijn sequence");
  return {std::string(bits), n};
}

HamPath seq_to_path(const DeBruijnSequence& b) {
  if (!is_de_bruijn(b.bits, b.degree)) throw CodecError("not a de Bruijn sequence");
  HamPath p{{}, b.degree};
  p.vertices.reserve(b.bits.size());
  for (std::size_t i = 0; i < b.bits.size(); ++i) p.vertices.push_back(VertexId{window(b.bits, i, b.degree)});
  return p;
}

DeBruijnSequence path_to_seq(const HamPath& p) {
  const unsigned n = p.degree;
  if (n == 0 || n > kMaxDegree) throw CodecError("degree must be between 1 and " + std::to_string(kMaxDegree));
  const std::size_t size = std::size_t{1} << n;
  if (p.vertices.size() != size) throw CodecError("path must visit all " + std::to_string(size) + " vertices");
  const std::size_t mask = size - 1;
  std::vector<bool> seen(size, false);
  std::string bits;
  bits.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto v = p.vertices[i].index();
    if (v >= size || seen[v]) throw CodecError("path repeats a vertex or leaves the graph");
    seen[v] = true;
    // Successor (cyclically) must share the last n-1 bits as its prefix.
    auto next = p.vertices[(i + 1) % size].index();
    if (((v << 1) & mask) != (next & ~std::size_t{1} & mask)) throw CodecError("consecutive path vertices are not adjacent");
    bits.push_back(static_cast<char>('0' + ((v >> (n - 1)) & 1)));
  }
  return make_sequence(bits, n);
}

std::string encode(const DeBruijnSequence& b) {
  const unsigned n = b.degree;
  if (n < 2) throw CodecError("encode needs degree >= 2");
  HamPath path = seq_to_path(b);
  DeBruijnTower tower(n);

  // The path is a spanning tree of DB_n(2) rooted at its last vertex.
  const auto& top = tower.step(n - 1);
  SpanningTree path_tree;
  path_tree.out_edge.assign(path.vertices.size(), std::nullopt);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    path_tree.out_edge[path.vertices[i].index()] =
        top.line_edge(EdgeId{path.vertices[i].index()}, EdgeId{path.vertices[i + 1].index()});
  }
  path_tree.root = path.vertices.back();

  // arrays[k] is the tree array A_k of DB_k(2).
  std::vector<TreeArray> arrays(n);
  arrays[n - 1] = top.pi(path_tree);
  for (unsigned k = n - 2; k >= 1; --k) {
    arrays[k] = tower.step(k).pi(last_entries_tree(tower.graph(k + 1), arrays[k + 1]));
  }
  SpanningTree t1 = last_entries_tree(tower.graph(1), arrays[1]);

  std::string out(std::size_t{1} << (n - 1), '0');
  // out[i - 1] holds the 1-based bit s_i.
  out[0] = t1.root.index() == 0 ? '0' : '1';
  for (unsigned k = 1; k + 2 <= n; ++k) {
    const std::size_t count = std::size_t{1} << k;
    for (std::size_t w = 0; w < count; ++w) {
      const ArrayEntry& first = arrays[k].lists[w].front();
      out[count + w - 1] = first.edge() == zero_edge(w) ? '0' : '1';
    }
  }
  // The last bit is the free first entry of the root list of A_{n-1}.
  const TreeArray& last = arrays[n - 1];
  out.back() = last.lists[last.root.index()].front().edge() == zero_edge(last.root.index()) ? '0' : '1';
  return out;
}

DeBruijnSequence decode(std::string_view bits, unsigned n) {
  if (n < 2 || n > kMaxDegree) throw CodecError("decode needs degree between 2 and " + std::to_string(kMaxDegree));
  const std::size_t expected = std::size_t{1} << (n - 1);
  if (bits.size() != expected) {
    throw CodecError("expected " + std::to_string(expected) + " bits, got " + std::to_string(bits.size()));
  }
  check_bits(bits);
  DeBruijnTower tower(n);
  auto bit = [&](std::size_t one_based) { return bits[one_based - 1] == '1'; };

  // T_1 on DB_1(2): the other vertex points at the root.
  SpanningTree tree;
  {
    std::size_t root = bit(1) ? 1 : 0;
    std::size_t other = 1 - root;
    tree.root = VertexId{root};
    tree.out_edge.assign(2, std::nullopt);
    tree.out_edge[other] = EdgeId{2 * other + root};
  }

  for (unsigned k = 1; k + 2 <= n; ++k) {
    const std::size_t count = std::size_t{1} << k;
    TreeArray a;
    a.root = tree.root;
    a.lists.resize(count);
    for (std::size_t w = 0; w < count; ++w) {
      a.lists[w].push_back(ArrayEntry::of(bit(count + w) ? one_edge(w) : zero_edge(w)));
      a.lists[w].push_back(w == tree.root.index() ? ArrayEntry::omega() : ArrayEntry::of(*tree.out_edge[w]));
    }
    tree = tower.step(k).sigma(a);
  }

  // A_{n-1}: non-root lists hold both out-edges, tree edge last.
  const std::size_t count = std::size_t{1} << (n - 1);
  TreeArray a;
  a.root = tree.root;
  a.lists.resize(count);
  for (std::size_t w = 0; w < count; ++w) {
    if (w == tree.root.index()) {
      a.lists[w] = {ArrayEntry::of(bit(expected) ? one_edge(w) : zero_edge(w)), ArrayEntry::omega()};
    } else {
      EdgeId t = *tree.out_edge[w];
      EdgeId other = t == zero_edge(w) ? one_edge(w) : zero_edge(w);
      a.lists[w] = {ArrayEntry::of(other), ArrayEntry::of(t)};
    }
  }
  const auto& top = tower.step(n - 1);
  SpanningTree path_tree = top.sigma(a);

  // Walk the tree from its unique leaf to the root.
  auto indeg = tree_indegrees(top.line_graph(), path_tree);
  HamPath path{{}, n};
  std::size_t start = indeg.size();
  for (std::size_t v = 0; v < indeg.size(); ++v) {
    if (indeg[v] == 0) {
      if (start != indeg.size()) throw std::logic_error("decode: tree is not a path");
      start = v;
    }
  }
  if (start == indeg.size()) throw std::logic_error("decode: tree has no leaf");
  for (VertexId v{start};;) {
    path.vertices.push_back(v);
    const auto& e = path_tree.out_edge[v.index()];
    if (!e) break;
    v = top.line_graph().target(*e);
  }
  if (path.vertices.size() != indeg.size()) throw std::logic_error("decode: tree is not a Hamiltonian path");
  return path_to_seq(path);
}

std::vector<DeBruijnSequence> enumerate_db_sequences(unsigned n) {
  if (n == 0 || n > 4) throw CodecError("enumeration supports degrees 1 to 4");
  const std::size_t len = std::size_t{1} << n;
  std::vector<DeBruijnSequence> out;
  std::string bits(len, '0');
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
    for (std::size_t i = 0; i < len; ++i) bits[i] = static_cast<char>('0' + ((x >> (len - 1 - i)) & 1));
    if (is_de_bruijn(bits, n)) out.push_back({bits, n});
  }
  return out;
}

}  // namespace linetrees
