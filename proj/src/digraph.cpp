#include "linetrees/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace linetrees {

namespace {

constexpr std::string_view kSymbols = "0123456789abcdefghijklmnopqrstuvwxyz";

char symbol(unsigned i) {
  return kSymbols[i];
}

void check_alphabet(unsigned symbols) {
  if (symbols > kSymbols.size()) {
    throw GraphError("alphabet larger than " + std::to_string(kSymbols.size()) + " symbols");
  }
}

// All strings of `length` over `symbols` letters in lexicographic order,
// optionally skipping those with equal adjacent characters.
std::vector<std::string> words(unsigned symbols, unsigned length, bool kautz_only) {
  std::vector<std::string> out;
  std::string w(length, '0');
  auto extend = [&](auto&& self, unsigned pos) -> void {
    if (pos == length) {
      out.push_back(w);
      return;
    }
    for (unsigned c = 0; c < symbols; ++c) {
      if (kautz_only && pos > 0 && w[pos - 1] == symbol(c)) continue;
      w[pos] = symbol(c);
      self(self, pos + 1);
    }
  };
  extend(extend, 0);
  return out;
}

DiGraph shift_graph(unsigned symbols, unsigned n, bool kautz_only, Family family) {
  check_alphabet(symbols);
  auto vertex_words = words(symbols, n, kautz_only);
  auto edge_words = words(symbols, n + 1, kautz_only);

  std::unordered_map<std::string, std::size_t> rank;
  rank.reserve(vertex_words.size());
  for (std::size_t i = 0; i < vertex_words.size(); ++i) rank.emplace(vertex_words[i], i);

  std::vector<Edge> edges;
  edges.reserve(edge_words.size());
  for (const auto& w : edge_words) {
    edges.push_back({VertexId{rank.at(w.substr(0, n))}, VertexId{rank.at(w.substr(1))}});
  }
  std::vector<std::optional<std::string>> vlabels(vertex_words.begin(), vertex_words.end());
  std::vector<std::optional<std::string>> elabels(edge_words.begin(), edge_words.end());
  return DiGraph(vertex_words.size(), std::move(edges), std::move(vlabels), std::move(elabels), family);
}

std::vector<bool> reachable(const DiGraph& g, VertexId start, bool forward) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<VertexId> stack{start};
  seen[start.index()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto next = forward ? g.out_edges(v) : g.in_edges(v);
    for (EdgeId e : next) {
      VertexId w = forward ? g.target(e) : g.source(e);
      if (!seen[w.index()]) {
        seen[w.index()] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

std::string to_string(FamilyKind kind) {
  return kind == FamilyKind::DeBruijn ? "db" : "kautz";
}

DiGraph::DiGraph(std::size_t num_vertices, std::vector<Edge> edges,
                 std::vector<std::optional<std::string>> vertex_labels,
                 std::vector<std::optional<std::string>> edge_labels, std::optional<Family> family)
    : edges_(std::move(edges)),
      vertex_labels_(std::move(vertex_labels)),
      edge_labels_(std::move(edge_labels)),
      indeg_(num_vertices, 0),
      outdeg_(num_vertices, 0),
      out_edges_(num_vertices),
      in_edges_(num_vertices),
      out_position_(edges_.size(), 0),
      family_(family) {
  if (num_vertices == 0) throw GraphError("graph has an empty vertex set");
  if (vertex_labels_.empty()) vertex_labels_.resize(num_vertices);
  if (edge_labels_.empty()) edge_labels_.resize(edges_.size());
  if (vertex_labels_.size() != num_vertices) throw GraphError("vertex label count does not match vertex count");
  if (edge_labels_.size() != edges_.size()) throw GraphError("edge label count does not match edge count");

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& [s, t] = edges_[i];
    if (s.index() >= num_vertices || t.index() >= num_vertices) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    out_position_[i] = out_edges_[s.index()].size();
    out_edges_[s.index()].push_back(EdgeId{i});
    in_edges_[t.index()].push_back(EdgeId{i});
    ++outdeg_[s.index()];
    ++indeg_[t.index()];
  }

  std::unordered_set<std::string> seen;
  for (const auto& l : vertex_labels_) {
    if (l && !seen.insert(*l).second) throw GraphError("duplicate vertex label '" + *l + "'");
  }
  seen.clear();
  for (const auto& l : edge_labels_) {
    if (l && !seen.insert(*l).second) throw GraphError("duplicate edge label '" + *l + "'");
  }
}

std::string DiGraph::vertex_name(VertexId v) const {
  const auto& l = vertex_labels_[v.index()];
  return l ? *l : std::to_string(v.index());
}

std::string DiGraph::edge_name(EdgeId e) const {
  const auto& l = edge_labels_[e.index()];
  return l ? *l : "e" + std::to_string(e.index());
}

std::optional<VertexId> DiGraph::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertex_labels_.size(); ++i) {
    if (vertex_labels_[i] && *vertex_labels_[i] == name) return VertexId{i};
  }
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
  if (ec == std::errc{} && ptr == name.data() + name.size() && idx < num_vertices() && !vertex_labels_[idx]) {
    return VertexId{idx};
  }
  return std::nullopt;
}

std::optional<EdgeId> DiGraph::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edge_labels_.size(); ++i) {
    if (edge_labels_[i] && *edge_labels_[i] == name) return EdgeId{i};
  }
  if (name.size() > 1 && name[0] == 'e') {
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec == std::errc{} && ptr == name.data() + name.size() && idx < num_edges() && !edge_labels_[idx]) {
      return EdgeId{idx};
    }
  }
  return std::nullopt;
}

std::optional<EdgeId> DiGraph::edge_between(VertexId u, VertexId v) const {
  for (EdgeId e : out_edges(u)) {
    if (target(e) == v) return e;
  }
  return std::nullopt;
}

bool DiGraph::has_vertex_labels() const {
  return std::all_of(vertex_labels_.begin(), vertex_labels_.end(), [](const auto& l) { return l.has_value(); });
}

DiGraph build_graph(std::span<const std::pair<std::size_t, std::size_t>> edge_list,
                    std::optional<std::size_t> num_vertices,
                    std::vector<std::optional<std::string>> vertex_labels,
                    std::vector<std::optional<std::string>> edge_labels) {
  std::size_t inferred = 0;
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [s, t] : edge_list) {
    inferred = std::max({inferred, s + 1, t + 1});
    edges.push_back({VertexId{s}, VertexId{t}});
  }
  std::size_t n = num_vertices.value_or(inferred);
  if (n < inferred) throw GraphError("vertex index out of range");
  return DiGraph(n, std::move(edges), std::move(vertex_labels), std::move(edge_labels));
}

LineGraphMap::LineGraphMap(std::size_t num_edges) : forward_(num_edges), backward_(num_edges) {
  for (std::size_t i = 0; i < num_edges; ++i) {
    forward_[i] = VertexId{i};
    backward_[i] = EdgeId{i};
  }
}

LineGraph line_graph(const DiGraph& g) {
  if (g.num_edges() == 0) throw GraphError("line graph of an edgeless graph has no vertices");
  std::vector<Edge> edges;
  std::vector<std::optional<std::string>> elabels;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EdgeId e{i};
    for (EdgeId f : g.out_edges(g.target(e))) {
      edges.push_back({VertexId{e.index()}, VertexId{f.index()}});
      const auto& le = g.edge_label(e);
      const auto& lf = g.edge_label(f);
      if (le && lf && !le->empty() && le->size() == lf->size() &&
          std::string_view(*le).substr(1) == std::string_view(*lf).substr(0, lf->size() - 1)) {
        elabels.emplace_back(*le + lf->back());
      } else {
        elabels.emplace_back("(" + g.edge_name(e) + "," + g.edge_name(f) + ")");
      }
    }
  }
  std::vector<std::optional<std::string>> vlabels(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) vlabels[i] = g.edge_name(EdgeId{i});

  std::optional<Family> family;
  if (g.family()) family = Family{g.family()->kind, g.family()->m, g.family()->n + 1};

  return {DiGraph(g.num_edges(), std::move(edges), std::move(vlabels), std::move(elabels), family),
          LineGraphMap(g.num_edges())};
}

DiGraph debruijn(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw GraphError("debruijn requires m >= 1 and n >= 1");
  return shift_graph(m, n, false, Family{FamilyKind::DeBruijn, m, n});
}

DiGraph kautz(unsigned m, unsigned n) {
  if (m == 0 || n == 0) throw GraphError("kautz requires m >= 1 and n >= 1");
  return shift_graph(m + 1, n, true, Family{FamilyKind::Kautz, m, n});
}

DiGraph family_graph(const Family& family) {
  return family.kind == FamilyKind::DeBruijn ? debruijn(family.m, family.n) : kautz(family.m, family.n);
}

bool is_eulerian(const DiGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.indeg(VertexId{v}) != g.outdeg(VertexId{v})) return false;
  }
  return true;
}

bool is_strongly_connected(const DiGraph& g) {
  auto fwd = reachable(g, VertexId{0u}, true);
  auto bwd = reachable(g, VertexId{0u}, false);
  return std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
}

bool same_labeled_structure(const DiGraph& a, const DiGraph& b) {
  if (!a.has_vertex_labels() || !b.has_vertex_labels()) {
    throw GraphError("label comparison requires labels on every vertex");
  }
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  auto vertex_set = [](const DiGraph& g) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) out.push_back(*g.vertex_label(VertexId{v}));
    std::sort(out.begin(), out.end());
    return out;
  };
  auto edge_multiset = [](const DiGraph& g) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : g.edges()) out.emplace_back(*g.vertex_label(e.source), *g.vertex_label(e.target));
    std::sort(out.begin(), out.end());
    return out;
  };
  return vertex_set(a) == vertex_set(b) && edge_multiset(a) == edge_multiset(b);
}

std::vector<std::vector<VertexId>> similarity_classes(const DiGraph& g) {
  if (!g.has_vertex_labels()) throw GraphError("similarity classes need string labels on every vertex");
  std::size_t len = g.vertex_label(VertexId{0u})->size();
  if (len < 2) throw GraphError("similarity classes need labels of length >= 2");

  std::vector<std::vector<VertexId>> classes;
  std::map<std::string, std::size_t> slot;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::string& label = *g.vertex_label(VertexId{v});
    if (label.size() != len) throw GraphError("similarity classes need labels of uniform length");
    auto [it, inserted] = slot.try_emplace(label.substr(1), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(VertexId{v});
  }
  return classes;
}

std::vector<EdgeId> eulerian_circuit(const DiGraph& g, VertexId start) {
  if (!is_eulerian(g)) throw GraphError("graph is not Eulerian");
  std::vector<std::size_t> next(g.num_vertices(), 0);
  std::vector<EdgeId> circuit;
  // (vertex, edge used to arrive) stack.
  std::vector<std::pair<VertexId, std::optional<EdgeId>>> stack{{start, std::nullopt}};
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    auto outs = g.out_edges(v);
    if (next[v.index()] < outs.size()) {
      EdgeId e = outs[next[v.index()]++];
      stack.emplace_back(g.target(e), e);
    } else {
      if (via) circuit.push_back(*via);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != g.num_edges()) throw GraphError("graph edges are not all reachable from the start vertex");
  return circuit;
}

std::vector<VertexId> class_cycle(const DiGraph& g) {
  const auto& fam = g.family();
  if (!fam || fam->n < 2) throw GraphError("class_cycle needs a de Bruijn or Kautz graph with string length >= 2");
  const unsigned p = fam->n - 1;

  // Hamiltonian cycle of the predecessor, as vertex labels.
  std::vector<std::string> ham;
  if (p == 1) {
    DiGraph complete = family_graph({fam->kind, fam->m, 1});
    for (std::size_t v = 0; v < complete.num_vertices(); ++v) ham.push_back(*complete.vertex_label(VertexId{v}));
  } else {
    DiGraph grand = family_graph({fam->kind, fam->m, p - 1});
    for (EdgeId e : eulerian_circuit(grand)) ham.push_back(*grand.edge_label(e));
  }

  const std::size_t c = ham.size();
  std::string s = ham.front();
  for (std::size_t i = 1; i < c; ++i) s.push_back(ham[i].back());

  std::vector<VertexId> cycle;
  cycle.reserve(c);
  auto lookup = [&](const std::string& label) {
    auto v = g.find_vertex(label);
    if (!v) throw GraphError("class_cycle: vertex '" + label + "' not in graph");
    return *v;
  };
  for (std::size_t i = 0; i + 1 < c; ++i) cycle.push_back(lookup(s.substr(i, p + 1)));
  // The closing vertex runs from the last predecessor vertex into the first,
  // so it ends with the last character of the first predecessor vertex.
  cycle.push_back(lookup(s.substr(c - 1, p) + s[p - 1]));

  for (std::size_t i = 0; i < c; ++i) {
    if (!g.edge_between(cycle[i], cycle[(i + 1) % c])) {
      throw std::logic_error("class_cycle produced a non-edge");
    }
  }
  return cycle;
}

DiGraph read_edge_list(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<Edge> edges;
  std::vector<std::optional<std::string>> elabels;

  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return VertexId{it->second};
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3) {
      throw GraphError("line " + std::to_string(lineno) + ": expected 'SRC DST [LABEL]'");
    }
    VertexId s = vertex(tok[0]);
    VertexId t = vertex(tok[1]);
    edges.push_back({s, t});
    elabels.push_back(tok.size() == 3 ? std::optional<std::string>(tok[2]) : std::nullopt);
  }
  if (names.empty()) throw GraphError("graph has an empty vertex set");
  std::vector<std::optional<std::string>> vlabels(names.begin(), names.end());
  return DiGraph(names.size(), std::move(edges), std::move(vlabels), std::move(elabels));
}

void write_edge_list(std::ostream& out, const DiGraph& g) {
  out << "# " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n";
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EdgeId e{i};
    out << g.vertex_name(g.source(e)) << ' ' << g.vertex_name(g.target(e));
    if (g.edge_label(e)) out << ' ' << *g.edge_label(e);
    out << '\n';
  }
}

void write_dot(std::ostream& out, const DiGraph& g, std::string_view name) {
  out << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out << "  v" << v << " [label=\"" << g.vertex_name(VertexId{v}) << "\"];\n";
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    EdgeId e{i};
    out << "  v" << g.source(e).index() << " -> v" << g.target(e).index() << " [label=\"" << g.edge_name(e)
        << "\"];\n";
  }
  out << "}\n";
}

}  // namespace linetrees
