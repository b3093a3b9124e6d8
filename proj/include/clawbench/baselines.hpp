#pragma once

#include <string>
#include <vector>

#include "clawbench/graph.hpp"
#include "clawbench/invariants.hpp"
#include "clawbench/rational.hpp"

namespace clawbench {

struct MwisResult {
  std::vector<int> chosen;
  Rational weight = 0;
  std::string method;  // "greedy" or "exact"
};

inline std::vector<Rational> unit_weights(std::size_t n) {
  return std::vector<Rational>(n, Rational(1));
}

// Max-weight-first greedy: pick the heaviest remaining vertex (ties to the
// lowest index), delete its closed neighborhood. On a k-claw-free graph each
// pick kills at most k-1 optimum vertices, none heavier, hence the (k-1)
// approximation factor.
inline MwisResult greedy_mwis(const Graph& g, const std::vector<Rational>& w) {
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("greedy_mwis: weight size mismatch");
  for (const auto& x : w)
    if (x < 0) throw std::invalid_argument("negative vertex weight");
  std::vector<char> alive(g.vertex_count(), 1);
  MwisResult res;
  res.method = "greedy";
  for (;;) {
    int pick = -1;
    for (int v = 0; v < (int)g.vertex_count(); ++v)
      if (alive[v] && (pick < 0 || w[v] > w[pick])) pick = v;
    if (pick < 0) break;
    res.chosen.push_back(pick);
    res.weight += w[pick];
    alive[pick] = 0;
    for (int u : g.neighbors(pick)) alive[u] = 0;
  }
  std::sort(res.chosen.begin(), res.chosen.end());
  if (!is_independent_set(g, res.chosen))
    throw std::logic_error("greedy produced a dependent set");
  return res;
}

namespace detail {

struct WeightedMisSearch {
  const MaskGraph& g;
  const std::vector<Rational>& w;
  Rational best = -1;
  std::uint64_t best_set = 0;

  WeightedMisSearch(const MaskGraph& mg, const std::vector<Rational>& ww)
      : g(mg), w(ww) {}

  // Greedy clique cover of cand in the complement sense: partition cand into
  // cliques, bound adds the max weight per clique.
  Rational cover_bound(std::uint64_t cand) const {
    Rational bound = 0;
    std::vector<std::uint64_t> cliques;
    std::vector<Rational> maxw;
    std::uint64_t it = cand;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      bool placed = false;
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        if ((cliques[c] & ~g.adj[v]) == 0) {  // v adjacent to whole clique
          cliques[c] |= 1ull << v;
          if (w[v] > maxw[c]) maxw[c] = w[v];
          placed = true;
          break;
        }
      }
      if (!placed) {
        cliques.push_back(1ull << v);
        maxw.push_back(w[v]);
      }
    }
    for (const auto& m : maxw) bound += m;
    return bound;
  }

  void search(std::uint64_t cand, std::uint64_t cur, Rational cur_w) {
    if (cur_w > best) {
      best = cur_w;
      best_set = cur;
    }
    if (cand == 0) return;
    if (cur_w + cover_bound(cand) <= best) return;
    // branch on the heaviest candidate (ties: lowest index)
    int pick = -1;
    std::uint64_t it = cand;
    while (it) {
      int v = std::countr_zero(it);
      it &= it - 1;
      if (pick < 0 || w[v] > w[pick]) pick = v;
    }
    std::uint64_t bit = 1ull << pick;
    search(cand & ~bit & ~g.adj[pick], cur | bit, cur_w + w[pick]);
    search(cand & ~bit, cur, cur_w);
  }
};

}  // namespace detail

// Exact maximum-weight independent set by branch and bound with a weighted
// greedy clique-cover upper bound, rational arithmetic throughout.
inline MwisResult exact_mwis(const Graph& g, const std::vector<Rational>& w,
                             std::size_t guard = 64) {
  detail::require_mask_size(g, guard, "exact_mwis");
  if (w.size() != g.vertex_count())
    throw std::invalid_argument("exact_mwis: weight size mismatch");
  for (const auto& x : w)
    if (x < 0) throw std::invalid_argument("negative vertex weight");
  detail::MaskGraph mg(g);
  detail::WeightedMisSearch s(mg, w);
  std::uint64_t all =
      mg.n == 0 ? 0 : (mg.n == 64 ? ~0ull : (1ull << mg.n) - 1);
  s.search(all, 0, Rational(0));
  MwisResult res;
  res.method = "exact";
  res.chosen = detail::mask_to_vec(s.best_set);
  res.weight = s.best;
  if (!is_independent_set(g, res.chosen))
    throw std::logic_error("exact_mwis produced a dependent set");
  Rational check = 0;
  for (int v : res.chosen) check += w[v];
  if (check != res.weight)
    throw std::logic_error("exact_mwis weight bookkeeping mismatch");
  return res;
}

}  // namespace clawbench
