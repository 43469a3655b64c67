#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

EdgeList edges_of(const linetrees::DiGraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.source.index()), static_cast<int>(e.target.index()));
  return out;
}

std::set<Tree> spanning_trees(int num_vertices, const EdgeList& edges) {
  std::set<Tree> out;
  const int m = static_cast<int>(edges.size());
  const int k = num_vertices - 1;
  if (k > m) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> next(num_vertices, -1);
    bool ok = true;
    for (int e : pick) {
      int s = edges[e].first;
      if (next[s] != -1) {
        ok = false;
        break;
      }
      next[s] = edges[e].second;
    }
    if (ok) {
      int root = -1;
      for (int v = 0; v < num_vertices; ++v) {
        if (next[v] == -1) root = v;
      }
      for (int v = 0; v < num_vertices && ok; ++v) {
        int x = v;
        for (int step = 0; step < num_vertices && x != root; ++step) x = next[x];
        ok = x == root;
      }
      if (ok) out.insert({root, pick});
    }
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

EdgeList line_edges(const EdgeList& edges) {
  EdgeList out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    for (int f = 0; f < static_cast<int>(edges.size()); ++f) {
      if (edges[e].second == edges[f].first) out.emplace_back(e, f);
    }
  }
  return out;
}

Poly line_vertex_polynomial(int, const EdgeList& edges) {
  EdgeList lines = line_edges(edges);
  Poly p;
  for (const auto& [root, tree] : spanning_trees(static_cast<int>(edges.size()), lines)) {
    std::vector<int> vars;
    for (int le : tree) vars.push_back(lines[le].second);
    std::sort(vars.begin(), vars.end());
    ++p[vars];
  }
  return p;
}

Poly product_side(int num_vertices, const EdgeList& edges) {
  std::vector<int> indeg(num_vertices, 0);
  std::vector<std::vector<int>> out_edges(num_vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    ++indeg[edges[e].second];
    out_edges[edges[e].first].push_back(e);
  }
  for (int d : indeg) {
    if (d == 0) throw std::invalid_argument("product side needs indeg >= 1");
  }
  Poly p;
  for (const auto& [root, tree] : spanning_trees(num_vertices, edges)) {
    std::vector<int> vars(tree);
    // Ordered choices of indeg(v)-1 out-edges at every vertex.
    std::function<void(int, int)> expand = [&](int v, int left) {
      if (v == num_vertices) {
        std::vector<int> sorted(vars);
        std::sort(sorted.begin(), sorted.end());
        ++p[sorted];
        return;
      }
      if (left == 0) return expand(v + 1, v + 1 < num_vertices ? indeg[v + 1] - 1 : 0);
      for (int e : out_edges[v]) {
        vars.push_back(e);
        expand(v, left - 1);
        vars.pop_back();
      }
    };
    expand(0, indeg[0] - 1);
  }
  return p;
}

std::int64_t tree_arrays(int num_vertices, const EdgeList& edges) {
  std::vector<int> indeg(num_vertices, 0);
  std::vector<std::vector<int>> out_edges(num_vertices);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    ++indeg[edges[e].second];
    out_edges[edges[e].first].push_back(e);
  }
  const std::set<Tree> trees = spanning_trees(num_vertices, edges);
  std::int64_t count = 0;
  for (int root = 0; root < num_vertices; ++root) {
    if (indeg[root] == 0) continue;
    std::vector<int> last(num_vertices, -1);
    // Lists are generated in full; only the final entries matter for validity.
    std::function<std::int64_t(int)> fill = [&](int v) -> std::int64_t {
      if (v == num_vertices) {
        std::vector<int> tree;
        for (int u = 0; u < num_vertices; ++u) {
          if (u != root) tree.push_back(last[u]);
        }
        std::sort(tree.begin(), tree.end());
        return trees.count({root, tree}) ? 1 : 0;
      }
      const int length = indeg[v];
      if (length == 0) return 0;
      const int free_slots = v == root ? length - 1 : length;
      std::int64_t total = 0;
      std::vector<int> seq(free_slots, 0);
      const int base = static_cast<int>(out_edges[v].size());
      if (base == 0 && free_slots > 0) return 0;
      while (true) {
        if (v != root) last[v] = out_edges[v][seq.back()];
        total += fill(v + 1);
        int i = free_slots - 1;
        while (i >= 0 && seq[i] == base - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
      }
      return total;
    };
    count += fill(0);
  }
  return count;
}

namespace {

std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<std::int64_t>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      sub.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(sub);
  }
  return total;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::int64_t> smith_diagonal(const std::vector<std::vector<std::int64_t>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  const int r = std::min(rows, cols);
  std::vector<std::int64_t> divisors{1};
  for (int k = 1; k <= r; ++k) {
    std::vector<std::vector<int>> rs, cs;
    subsets(rows, k, rs);
    subsets(cols, k, cs);
    std::int64_t g = 0;
    for (const auto& ri : rs) {
      for (const auto& ci : cs) {
        std::vector<std::vector<std::int64_t>> sub;
        for (int a : ri) {
          std::vector<std::int64_t> row;
          for (int b : ci) row.push_back(m[a][b]);
          sub.push_back(row);
        }
        g = std::gcd(g, det(sub));
      }
    }
    divisors.push_back(std::abs(g));
  }
  std::vector<std::int64_t> out;
  for (int k = 1; k <= r; ++k) out.push_back(divisors[k] == 0 ? 0 : divisors[k] / divisors[k - 1]);
  return out;
}

std::int64_t torsion_count(const std::vector<std::int64_t>& cyclic_orders, std::int64_t k) {
  std::int64_t total = 1;
  for (auto d : cyclic_orders) total *= d == 0 ? 1 : std::gcd(k, d);
  return total;
}

bool same_finite_group(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  auto product = [](const std::vector<std::int64_t>& xs) {
    std::int64_t p = 1;
    for (auto x : xs) p *= x;
    return p;
  };
  const std::int64_t n = product(a);
  if (n != product(b)) return false;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (n % k == 0 && torsion_count(a, k) != torsion_count(b, k)) return false;
  }
  return true;
}

bool is_de_bruijn(const std::string& bits, int n) {
  std::set<std::string> windows;
  const std::string doubled = bits + bits;
  for (std::size_t i = 0; i < bits.size(); ++i) windows.insert(doubled.substr(i, n));
  return bits.size() == (std::size_t{1} << n) && windows.size() == bits.size();
}

}  // namespace oracle
