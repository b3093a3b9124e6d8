#pragma once

#include <random>

#include "clawbench/graph.hpp"

namespace testutil {

inline clawbench::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  clawbench::Graph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(i, j);
  return g;
}

// Exponential enumeration oracles, independent of the solver implementations.

inline bool subset_independent(const clawbench::Graph& g, unsigned mask) {
  for (int i = 0; i < (int)g.vertex_count(); ++i)
    for (int j = i + 1; j < (int)g.vertex_count(); ++j)
      if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(i, j)) return false;
  return true;
}

inline bool subset_clique(const clawbench::Graph& g, unsigned mask) {
  for (int i = 0; i < (int)g.vertex_count(); ++i)
    for (int j = i + 1; j < (int)g.vertex_count(); ++j)
      if ((mask >> i & 1) && (mask >> j & 1) && !g.has_edge(i, j)) return false;
  return true;
}

inline int naive_alpha(const clawbench::Graph& g) {
  int n = (int)g.vertex_count(), best = 0;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (subset_independent(g, m)) best = std::max(best, std::popcount(m));
  return best;
}

inline int naive_omega(const clawbench::Graph& g) {
  int n = (int)g.vertex_count(), best = 0;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (subset_clique(g, m)) best = std::max(best, std::popcount(m));
  return best;
}

inline bool naive_colorable(const clawbench::Graph& g, int k) {
  int n = (int)g.vertex_count();
  std::vector<int> color(n, 0);
  for (;;) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int i = 0;
    while (i < n && color[i] == k - 1) color[i++] = 0;
    if (i == n) return false;
    ++color[i];
  }
}

inline int naive_chi(const clawbench::Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (naive_colorable(g, k)) return k;
}

inline int naive_max_claw(const clawbench::Graph& g) {
  int n = (int)g.vertex_count(), best = 0;
  for (int c = 0; c < n; ++c)
    for (unsigned m = 0; m < (1u << n); ++m) {
      if (m >> c & 1) continue;
      bool all_nb = true;
      for (int v = 0; v < n; ++v)
        if ((m >> v & 1) && !g.has_edge(c, v)) all_nb = false;
      if (all_nb && subset_independent(g, m))
        best = std::max(best, std::popcount(m));
    }
  return best;
}

}  // namespace testutil
