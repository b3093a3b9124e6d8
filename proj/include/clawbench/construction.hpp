#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clawbench/graph.hpp"
#include "clawbench/invariants.hpp"

namespace clawbench {

// Conflict graph over a list of scaffold edges: one vertex per listed edge,
// adjacency iff the two edges are an intersecting matching pair (share an
// endpoint, or some endpoint of one is adjacent to some endpoint of the
// other -- i.e. the pair does not induce a 2-edge matching).
inline Graph conflict_graph(const Graph& scaffold,
                            const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges)
    if (!scaffold.has_edge(u, v))
      throw std::invalid_argument("conflict_graph: (" + std::to_string(u) +
                                  "," + std::to_string(v) +
                                  ") is not a scaffold edge");
  auto intersecting = [&](std::pair<int, int> a, std::pair<int, int> b) {
    auto [p, q] = a;
    auto [r, s] = b;
    if (p == r || p == s || q == r || q == s) return true;
    return scaffold.has_edge(p, r) || scaffold.has_edge(p, s) ||
           scaffold.has_edge(q, r) || scaffold.has_edge(q, s);
  };
  Graph g(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (intersecting(edges[i], edges[j])) g.add_edge((int)i, (int)j);
  return g;
}

// Bi-conflict composition: join h1 and h2 by a perfect matching (vertex v of
// h1 to vertex matching[v] of h2) and return the conflict graph over exactly
// those matching edges.
inline Graph bcc(const Graph& h1, const Graph& h2,
                 const std::vector<int>& matching) {
  std::size_t n = h1.vertex_count();
  if (h2.vertex_count() != n)
    throw std::invalid_argument("bcc: graphs must have equal vertex counts");
  if (matching.size() != n)
    throw std::invalid_argument("bcc: matching size mismatch");
  std::vector<char> hit(n, 0);
  for (int m : matching) {
    if (m < 0 || m >= (int)n || hit[m])
      throw std::invalid_argument("bcc: matching is not a bijection");
    hit[m] = 1;
  }
  Graph scaffold(2 * n);
  for (auto [u, v] : h1.edges()) scaffold.add_edge(u, v);
  for (auto [u, v] : h2.edges()) scaffold.add_edge((int)n + u, (int)n + v);
  std::vector<std::pair<int, int>> medges;
  for (std::size_t v = 0; v < n; ++v) {
    scaffold.add_edge((int)v, (int)n + matching[v]);
    medges.emplace_back((int)v, (int)n + matching[v]);
  }
  return conflict_graph(scaffold, medges);
}

inline std::vector<int> identity_matching(std::size_t n) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = (int)i;
  return m;
}

// --- Block construction -----------------------------------------------------

struct ConstructionParams {
  int k = 4;    // claw bound, >= 4
  int p = 1;    // number of blocks, >= 1
  int tau = 3;  // clique bound parameter, >= 3
  Graph H;      // intended (k-1, tau)-Ramsey witness

  void check() const {
    if (k < 4) throw std::invalid_argument("construction requires k >= 4");
    if (p < 1) throw std::invalid_argument("construction requires p >= 1");
    if (tau < 3) throw std::invalid_argument("construction requires tau >= 3");
    if ((int)H.vertex_count() < 2 * (tau - 1))
      throw std::invalid_argument(
          "construction requires |V(H)| >= 2(tau-1): each H copy donates "
          "tau-1 vertices to the clique behind it and tau-1 distinct "
          "vertices to the clique ahead of it");
  }
};

enum class EdgeClass { H1H2, H2Q, QH1next };

inline const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::H1H2: return "H1H2";
    case EdgeClass::H2Q: return "H2Q";
    default: return "QH1next";
  }
}

struct MatchingEdgeLabel {
  int vertex = 0;  // conflict-graph vertex
  int block = 0;
  EdgeClass cls = EdgeClass::H1H2;
  struct End {
    std::string copy;  // e.g. "H1_0", "H2_0", "Q_1"
    int local = 0;     // vertex index inside that copy
  } end1, end2;
};

struct ConstructionLabels {
  int blocks = 0;
  std::vector<MatchingEdgeLabel> entries;
  Graph scaffold;
  std::vector<std::pair<int, int>> matching_edges;  // scaffold endpoints
};

// Ring of p blocks. Each block holds two copies of H joined by a perfect
// matching, with the tau-1 lowest-indexed vertices of the second copy
// matched in index order to a (tau-1)-clique Q; Q is then matched to the
// tau-1 highest-indexed vertices of the next block's first H copy. The
// output is the conflict graph over all matching edges. For p = 1 the ring
// closes on the single block.
inline std::pair<Graph, ConstructionLabels> build_lemma_graph(
    const ConstructionParams& params) {
  params.check();
  int h = (int)params.H.vertex_count();
  int q = params.tau - 1;
  int per_block = 2 * h + q;
  Graph scaffold(params.p * per_block);
  scaffold.vertex_names.resize(scaffold.vertex_count());

  auto h1_base = [&](int i) { return i * per_block; };
  auto h2_base = [&](int i) { return i * per_block + h; };
  auto q_base = [&](int i) { return i * per_block + 2 * h; };

  for (int i = 0; i < params.p; ++i) {
    for (auto [u, v] : params.H.edges()) {
      scaffold.add_edge(h1_base(i) + u, h1_base(i) + v);
      scaffold.add_edge(h2_base(i) + u, h2_base(i) + v);
    }
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b)
        scaffold.add_edge(q_base(i) + a, q_base(i) + b);
    for (int v = 0; v < h; ++v) {
      scaffold.vertex_names[h1_base(i) + v] = "H1_" + std::to_string(i) + ":" + std::to_string(v);
      scaffold.vertex_names[h2_base(i) + v] = "H2_" + std::to_string(i) + ":" + std::to_string(v);
    }
    for (int v = 0; v < q; ++v)
      scaffold.vertex_names[q_base(i) + v] = "Q_" + std::to_string(i) + ":" + std::to_string(v);
  }

  ConstructionLabels labels;
  labels.blocks = params.p;
  auto add_matching_edge = [&](int u, int v, int block, EdgeClass cls,
                               const std::string& copy1, int local1,
                               const std::string& copy2, int local2) {
    scaffold.add_edge(u, v);
    MatchingEdgeLabel lab;
    lab.vertex = (int)labels.matching_edges.size();
    lab.block = block;
    lab.cls = cls;
    lab.end1 = {copy1, local1};
    lab.end2 = {copy2, local2};
    labels.entries.push_back(lab);
    labels.matching_edges.emplace_back(std::min(u, v), std::max(u, v));
  };

  for (int i = 0; i < params.p; ++i) {
    std::string si = std::to_string(i);
    for (int v = 0; v < h; ++v)
      add_matching_edge(h1_base(i) + v, h2_base(i) + v, i, EdgeClass::H1H2,
                        "H1_" + si, v, "H2_" + si, v);
    for (int v = 0; v < q; ++v)
      add_matching_edge(h2_base(i) + v, q_base(i) + v, i, EdgeClass::H2Q,
                        "H2_" + si, v, "Q_" + si, v);
    int next = (i + 1) % params.p;
    // Q attaches to the top tau-1 vertices of the next H1 copy: keeping this
    // index set disjoint from the low indices used on the H2 side prevents a
    // single H1H2 edge from conflicting with both neighboring cliques, which
    // would create a k-claw.
    for (int v = 0; v < q; ++v)
      add_matching_edge(q_base(i) + v, h1_base(next) + (h - q + v), i,
                        EdgeClass::QH1next, "Q_" + si, v,
                        "H1_" + std::to_string(next), h - q + v);
  }

  Graph g = conflict_graph(scaffold, labels.matching_edges);
  g.vertex_names.resize(g.vertex_count());
  for (const auto& e : labels.entries)
    g.vertex_names[e.vertex] = "B" + std::to_string(e.block) + ":" +
                               edge_class_name(e.cls) + ":" + e.end1.copy +
                               "." + std::to_string(e.end1.local);
  labels.scaffold = std::move(scaffold);
  return {std::move(g), std::move(labels)};
}

// --- Verification of the claimed bounds -------------------------------------

enum class ClaimStatus { Pass, Fail, Unverified };

struct ClaimResult {
  std::string name;
  ClaimStatus status = ClaimStatus::Unverified;
  std::string detail;
};

struct LemmaBoundsReport {
  bool h_is_witness = false;  // is H a (k-1,tau)-Ramsey witness?
  int alpha_h = -1;
  int alpha_g = -1;
  int omega_g = -1;
  int max_claw_g = -1;
  std::vector<ClaimResult> claims;  // connected, claw-free, alpha lower,
                                    // alpha upper, omega
  bool all_pass() const {
    for (const auto& c : claims)
      if (c.status != ClaimStatus::Pass) return false;
    return true;
  }
};

// Checks every bound the block construction promises: connectivity,
// k-claw-freeness, p*alpha(H) <= alpha(G) < 3p*alpha(H), omega(G) <= 3tau.
// Solver refusals surface as Unverified, never Pass.
inline LemmaBoundsReport verify_lemma_bounds(const Graph& g,
                                             const ConstructionLabels& labels,
                                             const ConstructionParams& params,
                                             std::size_t guard = 64) {
  (void)labels;
  LemmaBoundsReport rep;
  auto claim = [&](const std::string& name, auto&& compute) {
    ClaimResult c;
    c.name = name;
    try {
      auto [ok, detail] = compute();
      c.status = ok ? ClaimStatus::Pass : ClaimStatus::Fail;
      c.detail = detail;
    } catch (const guard_error& e) {
      c.status = ClaimStatus::Unverified;
      c.detail = e.what();
    }
    rep.claims.push_back(std::move(c));
  };

  try {
    rep.alpha_h = independence_number(params.H, guard).value;
    int omega_h = clique_number(params.H, guard).value;
    rep.h_is_witness =
        rep.alpha_h < params.k - 1 && omega_h < params.tau;
  } catch (const guard_error&) {
  }

  claim("connected", [&]() -> std::pair<bool, std::string> {
    bool ok = is_connected(g);
    return {ok, ok ? "graph is connected" : "graph is disconnected"};
  });
  claim("k-claw-free", [&]() -> std::pair<bool, std::string> {
    auto c = max_claw(g, guard);
    rep.max_claw_g = c.value;
    return {c.value < params.k,
            "max claw " + std::to_string(c.value) + " vs k = " +
                std::to_string(params.k)};
  });
  claim("alpha lower bound", [&]() -> std::pair<bool, std::string> {
    if (rep.alpha_h < 0) throw guard_error("alpha(H) unavailable");
    rep.alpha_g = independence_number(g, guard).value;
    long lb = (long)params.p * rep.alpha_h;
    return {lb <= rep.alpha_g, "p*alpha(H) = " + std::to_string(lb) +
                                   " <= alpha(G) = " +
                                   std::to_string(rep.alpha_g)};
  });
  claim("alpha upper bound", [&]() -> std::pair<bool, std::string> {
    if (rep.alpha_h < 0) throw guard_error("alpha(H) unavailable");
    if (rep.alpha_g < 0) rep.alpha_g = independence_number(g, guard).value;
    long ub = 3l * params.p * rep.alpha_h;
    return {rep.alpha_g < ub, "alpha(G) = " + std::to_string(rep.alpha_g) +
                                  " < 3p*alpha(H) = " + std::to_string(ub)};
  });
  claim("omega bound", [&]() -> std::pair<bool, std::string> {
    rep.omega_g = clique_number(g, guard).value;
    return {rep.omega_g <= 3 * params.tau,
            "omega(G) = " + std::to_string(rep.omega_g) +
                " <= 3*tau = " + std::to_string(3 * params.tau)};
  });
  return rep;
}

}  // namespace clawbench
