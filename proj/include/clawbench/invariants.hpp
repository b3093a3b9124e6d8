#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "clawbench/graph.hpp"

namespace clawbench {

// Raised when an exact solver refuses an instance instead of guessing.
class guard_error : public std::runtime_error {
  using std::runtime_error::runtime_error;

 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Mask view of a graph, usable while vertex_count <= 64.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const Graph& g) {
    n = (int)g.vertex_count();
    adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
      adj[u] |= 1ull << v;
      adj[v] |= 1ull << u;
    }
  }
  MaskGraph() = default;

  MaskGraph complement() const {
    MaskGraph c;
    c.n = n;
    c.adj.assign(n, 0);
    std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    for (int v = 0; v < n; ++v) c.adj[v] = full & ~adj[v] & ~(1ull << v);
    return c;
  }
};

inline void require_mask_size(const Graph& g, std::size_t limit,
                              const char* op) {
  if (g.vertex_count() > limit)
    throw guard_error(std::string(op) + ": instance with " +
                      std::to_string(g.vertex_count()) +
                      " vertices exceeds the exactness guard of " +
                      std::to_string(limit));
}

inline std::vector<int> mask_to_vec(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

// Tomita-style max clique: branch over a greedy coloring of the candidate
// set, highest color class first. Deterministic for a fixed input.
struct MaxCliqueSearch {
  const MaskGraph& g;
  std::uint64_t best_set = 0;
  int best = 0;

  explicit MaxCliqueSearch(const MaskGraph& mg) : g(mg) {}

  void run() {
    std::uint64_t all = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
    expand(all, 0, 0);
  }

  void expand(std::uint64_t cand, std::uint64_t cur, int cur_size) {
    if (cand == 0) {
      if (cur_size > best) {
        best = cur_size;
        best_set = cur;
      }
      return;
    }
    // Greedy coloring of cand; vertices recorded in color order.
    std::vector<int> order;
    std::vector<int> color;
    std::uint64_t uncolored = cand;
    int col = 0;
    while (uncolored) {
      ++col;
      std::uint64_t cls = uncolored;
      while (cls) {
        int v = std::countr_zero(cls);
        order.push_back(v);
        color.push_back(col);
        uncolored &= ~(1ull << v);
        cls &= ~(1ull << v);
        cls &= ~g.adj[v];
      }
    }
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      if (cur_size + color[i] <= best) return;
      int v = order[i];
      expand(cand & g.adj[v], cur | (1ull << v), cur_size + 1);
      cand &= ~(1ull << v);
    }
  }
};

inline std::pair<int, std::uint64_t> max_clique_mask(const MaskGraph& g) {
  if (g.n == 0) return {0, 0};
  MaxCliqueSearch s(g);
  s.run();
  return {s.best, s.best_set};
}

}  // namespace detail

// --- Witness validity predicates -------------------------------------------

inline bool is_independent_set(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

inline bool is_clique(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

inline bool is_proper_coloring(const Graph& g, const std::vector<int>& color) {
  if (color.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (color[u] == color[v]) return false;
  return true;
}

// Induced star: center adjacent to all leaves, leaves pairwise non-adjacent.
inline bool is_induced_star(const Graph& g, int center,
                            const std::vector<int>& leaves) {
  for (int l : leaves)
    if (!g.has_edge(center, l)) return false;
  return is_independent_set(g, leaves);
}

// --- Exact invariants -------------------------------------------------------

struct WitnessedValue {
  int value = 0;
  std::vector<int> witness;
};

inline WitnessedValue clique_number(const Graph& g, std::size_t guard = 64) {
  detail::require_mask_size(g, guard, "clique_number");
  detail::MaskGraph mg(g);
  auto [v, set] = detail::max_clique_mask(mg);
  WitnessedValue r{v, detail::mask_to_vec(set)};
  if (!is_clique(g, r.witness) || (int)r.witness.size() != r.value)
    throw std::logic_error("clique_number produced an invalid witness");
  return r;
}

inline WitnessedValue independence_number(const Graph& g,
                                          std::size_t guard = 64) {
  detail::require_mask_size(g, guard, "independence_number");
  detail::MaskGraph mg(g);
  auto [v, set] = detail::max_clique_mask(mg.complement());
  WitnessedValue r{v, detail::mask_to_vec(set)};
  if (!is_independent_set(g, r.witness) || (int)r.witness.size() != r.value)
    throw std::logic_error("independence_number produced an invalid witness");
  return r;
}

struct ColoringResult {
  int value = 0;
  std::vector<int> coloring;  // colors 0..value-1
};

namespace detail {

// DSATUR-ordered exact k-colorability search.
struct KColoring {
  const MaskGraph& g;
  int k;
  std::vector<int> color;                 // -1 = uncolored
  std::vector<std::uint64_t> used_next;   // colors used in neighborhood (bitmask)
  bool found = false;

  KColoring(const MaskGraph& mg, int kk)
      : g(mg), k(kk), color(mg.n, -1), used_next(mg.n, 0) {}

  bool solve() {
    rec(0);
    return found;
  }

  void rec(int colored) {
    if (found) return;
    if (colored == g.n) {
      found = true;
      return;
    }
    // pick uncolored vertex with max saturation, ties by degree then index
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[v] != -1) continue;
      int sat = std::popcount(used_next[v]);
      int deg = std::popcount(g.adj[v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int max_used = 0;
    for (int v = 0; v < g.n; ++v)
      if (color[v] >= max_used) max_used = color[v] + 1;
    int limit = std::min(k, max_used + 1);  // symmetry break: one fresh color
    for (int c = 0; c < limit; ++c) {
      if (used_next[pick] & (1ull << c)) continue;
      color[pick] = c;
      std::vector<std::pair<int, std::uint64_t>> undo;
      std::uint64_t nb = g.adj[pick];
      while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (!(used_next[w] & (1ull << c))) {
          undo.emplace_back(w, used_next[w]);
          used_next[w] |= 1ull << c;
        }
      }
      rec(colored + 1);
      if (found) return;
      for (auto& [w, old] : undo) used_next[w] = old;
      color[pick] = -1;
    }
  }
};

}  // namespace detail

// Exact chromatic number: search upward from the clique lower bound, proving
// optimality by exhausting (chi-1)-colorability.
inline ColoringResult chromatic_number(const Graph& g, std::size_t guard = 40) {
  detail::require_mask_size(g, guard, "chromatic_number");
  if (g.vertex_count() == 0) return {0, {}};
  detail::MaskGraph mg(g);
  int lower = detail::max_clique_mask(mg).first;
  for (int k = std::max(lower, 1);; ++k) {
    detail::KColoring search(mg, k);
    if (search.solve()) {
      ColoringResult r{k, search.color};
      if (!is_proper_coloring(g, r.coloring))
        throw std::logic_error("chromatic_number produced an improper coloring");
      return r;
    }
  }
}

struct ClawResult {
  int value = 0;  // largest r with an induced K_{1,r}
  int center = -1;
  std::vector<int> leaves;
};

// Largest induced star, computed per center as the independence number of
// the open neighborhood.
inline ClawResult max_claw(const Graph& g, std::size_t guard = 64) {
  ClawResult best;
  for (int v = 0; v < (int)g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    if ((int)nb.size() <= best.value) continue;  // cannot beat current best
    Graph h = induced_subgraph(g, nb);
    detail::require_mask_size(h, guard, "max_claw");
    auto a = independence_number(h, guard);
    if (a.value > best.value) {
      best.value = a.value;
      best.center = v;
      best.leaves.clear();
      std::vector<int> sorted_nb = nb;  // h's vertices follow sorted nb order
      for (int idx : a.witness) best.leaves.push_back(sorted_nb[idx]);
    }
  }
  if (best.center >= 0 && !is_induced_star(g, best.center, best.leaves))
    throw std::logic_error("max_claw produced an invalid witness");
  return best;
}

struct ClawFreeResult {
  bool claw_free = true;
  std::optional<ClawResult> counterexample;
};

inline ClawFreeResult is_k_claw_free(const Graph& g, int k,
                                     std::size_t guard = 64) {
  if (k < 3) throw std::invalid_argument("is_k_claw_free requires k >= 3");
  ClawResult c = max_claw(g, guard);
  if (c.value < k) return {true, std::nullopt};
  c.leaves.resize(k);  // any k leaves of the witness form an induced k-claw
  c.value = k;
  return {false, c};
}

// Bron-Kerbosch with pivoting. Each clique sorted ascending; list sorted
// lexicographically.
inline std::vector<std::vector<int>> maximal_cliques(
    const Graph& g, std::size_t max_output = 1000000, std::size_t guard = 64) {
  detail::require_mask_size(g, guard, "maximal_cliques");
  detail::MaskGraph mg(g);
  std::vector<std::vector<int>> out;
  std::uint64_t all = mg.n == 0 ? 0 : (mg.n == 64 ? ~0ull : (1ull << mg.n) - 1);

  auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p,
                 std::uint64_t x) -> void {
    if (p == 0 && x == 0) {
      if (out.size() >= max_output)
        throw guard_error("maximal_cliques: output guard of " +
                          std::to_string(max_output) + " cliques exceeded");
      out.push_back(detail::mask_to_vec(r));
      return;
    }
    // pivot: vertex of p|x maximizing |p & adj|
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    std::uint64_t it = px;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      int cnt = std::popcount(p & mg.adj[v]);
      if (cnt > best) {
        best = cnt;
        pivot = v;
      }
    }
    std::uint64_t ext = p & ~mg.adj[pivot];
    while (ext) {
      int v = std::countr_zero(ext);
      ext &= ext - 1;
      self(self, r | (1ull << v), p & mg.adj[v], x & mg.adj[v]);
      p &= ~(1ull << v);
      x |= 1ull << v;
    }
  };
  if (mg.n > 0) rec(rec, 0, all, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- Combined report --------------------------------------------------------

struct InvariantReport {
  WitnessedValue alpha;
  WitnessedValue omega;
  std::optional<ColoringResult> chi;  // absent when the chi guard refuses
  ClawResult max_claw;
};

inline InvariantReport compute_invariants(const Graph& g,
                                          std::size_t guard = 64,
                                          std::size_t chi_guard = 40) {
  InvariantReport r;
  r.alpha = independence_number(g, guard);
  r.omega = clique_number(g, guard);
  if (g.vertex_count() <= chi_guard) r.chi = chromatic_number(g, chi_guard);
  r.max_claw = max_claw(g, guard);
  return r;
}

}  // namespace clawbench
