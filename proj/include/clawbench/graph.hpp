#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clawbench {

// Simple undirected graph on dense 0-based vertices. Immutable once built
// (all mutation happens through the builder-style add_edge before sharing).
// Adjacency is kept both as a sorted edge list (canonical serialization
// order) and per-vertex neighbor lists (constant-ish adjacency queries).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;  // duplicate, idempotent
    edges_.insert(it, e);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= (int)adj_.size() || v >= (int)adj_.size())
      return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  // Sorted lexicographically, each pair (u, v) with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::vector<std::string> vertex_names;  // optional provenance labels

  bool operator==(const Graph& o) const {
    return adj_.size() == o.adj_.size() && edges_ == o.edges_;
  }

 private:
  static void insert_sorted(std::vector<int>& v, int x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= (int)adj_.size())
      throw std::out_of_range("vertex index " + std::to_string(v) +
                              " out of range for graph on " +
                              std::to_string(adj_.size()) + " vertices");
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// --- DIMACS edge format -----------------------------------------------------
//
// Optional `c` comment lines, exactly one `p edge <n> <m>` line, then m lines
// `e <u> <v>` with 1 <= u < v <= n. Vertices re-indexed to 0-based.

inline Graph graph_from_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_p = false;
  long n = 0, m = 0, seen_edges = 0;
  Graph g;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("dimacs parse error at line " +
                             std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (have_p) fail("duplicate p line");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        fail("malformed p line");
      have_p = true;
      g = Graph((std::size_t)n);
    } else if (tag == "e") {
      if (!have_p) fail("edge before p line");
      long u, v;
      if (!(ls >> u >> v)) fail("malformed e line");
      if (u < 1 || u > n || v < 1 || v > n) fail("edge index out of range");
      if (u == v) fail("self-loop");
      g.add_edge((int)u - 1, (int)v - 1);
      ++seen_edges;
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_p) {
    lineno = 0;
    fail("missing p line");
  }
  if (seen_edges != m)
    throw std::runtime_error("dimacs parse error: p line promises " +
                             std::to_string(m) + " edges, file has " +
                             std::to_string(seen_edges));
  return g;
}

inline std::string graph_to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

// --- Generators -------------------------------------------------------------

inline Graph circulant(std::size_t n, const std::set<int>& connections) {
  Graph g(n);
  for (int c : connections) {
    if (c < 1 || 2 * (std::size_t)c > n)
      throw std::invalid_argument("circulant connection " + std::to_string(c) +
                                  " outside [1, n/2]");
    for (std::size_t i = 0; i < n; ++i)
      g.add_edge((int)i, (int)((i + c) % n));
  }
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge((int)i, (int)j);
  return g;
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph cycle_graph(std::size_t n) { return circulant(n, {1}); }

inline Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

// --- Structural operations --------------------------------------------------

inline Graph complement(const Graph& g) {
  std::size_t n = g.vertex_count();
  Graph out(n);
  out.vertex_names = g.vertex_names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.has_edge((int)i, (int)j)) out.add_edge((int)i, (int)j);
  return out;
}

// Replace each vertex v by a clique of sizes[v] vertices, fully joined to
// the replacements of v's neighbors. k-claw-free graphs are closed under
// this operation.
inline Graph clique_replace(const Graph& g, const std::vector<int>& sizes) {
  if (sizes.size() != g.vertex_count())
    throw std::invalid_argument("clique_replace: one size per vertex required");
  std::size_t total = 0;
  std::vector<int> offset(g.vertex_count());
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 1)
      throw std::invalid_argument("clique_replace: size must be >= 1");
    offset[v] = (int)total;
    total += (std::size_t)sizes[v];
  }
  Graph out(total);
  out.vertex_names.resize(total);
  for (std::size_t v = 0; v < sizes.size(); ++v)
    for (int a = 0; a < sizes[v]; ++a) {
      std::string base = v < g.vertex_names.size() && !g.vertex_names[v].empty()
                             ? g.vertex_names[v]
                             : "v" + std::to_string(v);
      out.vertex_names[offset[v] + a] = base + "#" + std::to_string(a);
      for (int b = a + 1; b < sizes[v]; ++b)
        out.add_edge(offset[v] + a, offset[v] + b);
    }
  for (auto [u, v] : g.edges())
    for (int a = 0; a < sizes[u]; ++a)
      for (int b = 0; b < sizes[v]; ++b)
        out.add_edge(offset[u] + a, offset[v] + b);
  return out;
}

// Empty graph counts as connected.
inline bool is_connected(const Graph& g) {
  std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= (int)g.vertex_count())
      throw std::out_of_range("induced_subgraph: vertex out of range");
  // keep vertices in sorted order for determinism
  std::map<int, int> index;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) index[v] = (int)index.size();
  Graph out(sorted.size());
  out.vertex_names.resize(sorted.size());
  for (int v : sorted)
    if ((std::size_t)v < g.vertex_names.size())
      out.vertex_names[index[v]] = g.vertex_names[v];
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j]))
        out.add_edge((int)i, (int)j);
  return out;
}

}  // namespace clawbench
