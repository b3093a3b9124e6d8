#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clawbench/graph.hpp"
#include "clawbench/invariants.hpp"
#include "clawbench/lp.hpp"
#include "clawbench/rational.hpp"

namespace clawbench {

// --- Subset helpers (vertex sets as 64-bit masks) ---------------------------

namespace detail {

inline std::uint64_t vec_to_mask(const std::vector<int>& v) {
  std::uint64_t m = 0;
  for (int x : v) {
    if (x < 0 || x >= 64) throw std::out_of_range("vertex outside mask range");
    m |= 1ull << x;
  }
  return m;
}

inline std::string set_to_string(std::uint64_t m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_to_vec(m)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

// All subsets of {0..n-1} with size <= k, ordered by (size, mask value).
inline std::vector<std::uint64_t> subsets_up_to(int n, int k) {
  std::vector<std::vector<std::uint64_t>> by_size(k + 1);
  by_size[0].push_back(0);
  for (int s = 1; s <= k; ++s) {
    // extend each (s-1)-subset by a larger vertex
    for (std::uint64_t prev : by_size[s - 1]) {
      int top = prev == 0 ? -1 : 63 - std::countl_zero(prev);
      for (int v = top + 1; v < n; ++v)
        by_size[s].push_back(prev | (1ull << v));
    }
    std::sort(by_size[s].begin(), by_size[s].end());
  }
  std::vector<std::uint64_t> out;
  for (auto& v : by_size)
    for (auto m : v) out.push_back(m);
  return out;
}

}  // namespace detail

// --- Domain types -----------------------------------------------------------

struct FractionalPoint {
  std::vector<Rational> values;  // one per vertex
};

// Subset-indexed value vector emulating moments of a distribution over 0/1
// solutions. Missing entries are errors when referenced, never implicit
// zeros.
struct PseudoMoment {
  int level = 0;  // maximum materialized subset size
  std::map<std::uint64_t, Rational> entries;

  const Rational& at(std::uint64_t set) const {
    auto it = entries.find(set);
    if (it == entries.end())
      throw std::runtime_error("pseudo-moment entry missing for subset " +
                               detail::set_to_string(set));
    return it->second;
  }
};

// --- Junta values -----------------------------------------------------------

// J_{S,T}(y) = sum over T' subset of T of (-1)^{|T'|} y_{S u T'}; the
// pseudo-probability of "all of S, none of T". S and T must be disjoint.
inline Rational junta_value(const PseudoMoment& y, std::uint64_t S,
                            std::uint64_t T) {
  if (S & T) throw std::invalid_argument("junta_value: S and T intersect");
  Rational total = 0;
  std::uint64_t sub = T;
  for (;;) {
    int sign = std::popcount(sub) % 2 ? -1 : 1;
    total += sign * y.at(S | sub);
    if (sub == 0) break;
    sub = (sub - 1) & T;
  }
  return total;
}

inline Rational junta_value(const PseudoMoment& y, const std::vector<int>& S,
                            const std::vector<int>& T) {
  return junta_value(y, detail::vec_to_mask(S), detail::vec_to_mask(T));
}

// Same alternating sum with {i} joined into every term (set-union collapse
// when i already occurs).
inline Rational junta_value_with(const PseudoMoment& y, std::uint64_t S,
                                 std::uint64_t T, int i) {
  if (S & T) throw std::invalid_argument("junta_value_with: S,T intersect");
  Rational total = 0;
  std::uint64_t unit = 1ull << i;
  std::uint64_t sub = T;
  for (;;) {
    int sign = std::popcount(sub) % 2 ? -1 : 1;
    total += sign * y.at(S | sub | unit);
    if (sub == 0) break;
    sub = (sub - 1) & T;
  }
  return total;
}

// --- The explicit SA-feasible point -----------------------------------------

// y_empty = 1, singletons 1/(W + ell), everything else 0, materialized for
// all subsets of size <= ell+1. W defaults to the exact clique number; an
// upper bound may be supplied for graphs too large for exact omega.
inline PseudoMoment uniform_pseudo_moment(
    const Graph& g, int ell, std::optional<int> omega_bound = std::nullopt) {
  int n = (int)g.vertex_count();
  int W = omega_bound ? *omega_bound : clique_number(g).value;
  PseudoMoment y;
  y.level = ell + 1;
  Rational single(1, W + ell);
  for (std::uint64_t s : detail::subsets_up_to(n, ell + 1)) {
    int sz = std::popcount(s);
    y.entries[s] = sz == 0 ? Rational(1) : sz == 1 ? single : Rational(0);
  }
  return y;
}

// --- Feasibility checkers ---------------------------------------------------

struct SaViolation {
  std::string constraint;  // "normalization", "junta", "junta-var", "clique"
  std::vector<int> S, T;
  std::vector<int> clique;  // for clique constraints
  int vertex = -1;          // for junta-var constraints
  Rational value = 0;
};

struct SaResult {
  bool feasible = true;
  std::optional<SaViolation> violation;
};

// Exhaustive level-ell Sherali-Adams feasibility on QSTAB(g): for every
// disjoint (S,T) with |S u T| <= ell, the junta value, the per-vertex junta
// values, and the clique junta constraints (maximal cliques only) must be
// nonnegative, and y_empty must equal 1. First violation in canonical
// enumeration order is reported.
inline SaResult sa_feasible(const PseudoMoment& y, int ell, const Graph& g) {
  int n = (int)g.vertex_count();
  if (y.at(0) != 1)
    return {false, SaViolation{"normalization", {}, {}, {}, -1, y.at(0)}};
  auto cliques = maximal_cliques(g);
  std::vector<std::uint64_t> clique_masks;
  for (auto& q : cliques) clique_masks.push_back(detail::vec_to_mask(q));

  for (std::uint64_t u : detail::subsets_up_to(n, ell)) {
    // split u into S and all-subsets-as-S (T the rest)
    std::uint64_t S = u;
    for (;;) {
      std::uint64_t T = u & ~S;
      Rational j = junta_value(y, S, T);
      if (j < 0)
        return {false, SaViolation{"junta", detail::mask_to_vec(S),
                                   detail::mask_to_vec(T), {}, -1, j}};
      for (int i = 0; i < n; ++i) {
        Rational ji = junta_value_with(y, S, T, i);
        if (ji < 0)
          return {false, SaViolation{"junta-var", detail::mask_to_vec(S),
                                     detail::mask_to_vec(T), {}, i, ji}};
      }
      for (std::size_t qi = 0; qi < clique_masks.size(); ++qi) {
        Rational lhs = j;
        for (int i : cliques[qi]) lhs -= junta_value_with(y, S, T, i);
        if (lhs < 0)
          return {false, SaViolation{"clique", detail::mask_to_vec(S),
                                     detail::mask_to_vec(T), cliques[qi], -1,
                                     lhs}};
      }
      if (S == 0) break;
      S = (S - 1) & u;
    }
  }
  return {true, std::nullopt};
}

struct QstabResult {
  bool feasible = true;
  std::optional<std::vector<int>> violated_clique;  // or box: single vertex
};

// Box constraints plus one constraint per maximal clique (sufficient, since
// clique sums are monotone under nonnegative x).
inline QstabResult qstab_feasible(const FractionalPoint& x, const Graph& g) {
  if (x.values.size() != g.vertex_count())
    throw std::invalid_argument("qstab_feasible: point/graph size mismatch");
  for (int i = 0; i < (int)x.values.size(); ++i)
    if (x.values[i] < 0 || x.values[i] > 1)
      return {false, std::vector<int>{i}};
  for (const auto& q : maximal_cliques(g)) {
    Rational s = 0;
    for (int i : q) s += x.values[i];
    if (s > 1) return {false, q};
  }
  return {true, std::nullopt};
}

struct KgResult {
  bool feasible = true;
  std::optional<std::pair<int, int>> violated_edge;  // (-1,v) for box
};

inline KgResult kg_feasible(const FractionalPoint& x, const Graph& g) {
  if (x.values.size() != g.vertex_count())
    throw std::invalid_argument("kg_feasible: point/graph size mismatch");
  for (int i = 0; i < (int)x.values.size(); ++i)
    if (x.values[i] < 0 || x.values[i] > 1)
      return {false, std::make_pair(-1, i)};
  for (auto [u, v] : g.edges())
    if (x.values[u] + x.values[v] > 1) return {false, std::make_pair(u, v)};
  return {true, std::nullopt};
}

// The constant point 1/t; QSTAB-feasible whenever t exceeds the clique
// number, with objective n/t under unit weights.
inline FractionalPoint qstab_bad_point(const Graph& g, int t) {
  int w = clique_number(g).value;
  if (t <= w)
    throw std::invalid_argument("qstab_bad_point: t = " + std::to_string(t) +
                                " must exceed omega = " + std::to_string(w));
  FractionalPoint x;
  x.values.assign(g.vertex_count(), Rational(1, t));
  return x;
}

// --- LP builders ------------------------------------------------------------

inline LinearProgram qstab_lp(const Graph& g, const std::vector<Rational>& w) {
  int n = (int)g.vertex_count();
  if ((int)w.size() != n)
    throw std::invalid_argument("qstab_lp: weight vector size mismatch");
  LinearProgram lp;
  lp.num_vars = n;
  lp.objective = w;
  for (int i = 0; i < n; ++i) {
    LinearRow r;
    r.coeffs.emplace_back(i, Rational(1));
    r.rel = Relation::GreaterEq;
    r.rhs = 0;
    lp.rows.push_back(std::move(r));
  }
  for (const auto& q : maximal_cliques(g)) {
    LinearRow r;
    for (int i : q) r.coeffs.emplace_back(i, Rational(1));
    r.rel = Relation::LessEq;
    r.rhs = 1;
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

// The plain edge relaxation K_G.
inline LinearProgram kg_lp(const Graph& g, const std::vector<Rational>& w) {
  int n = (int)g.vertex_count();
  LinearProgram lp;
  lp.num_vars = n;
  lp.objective = w;
  for (int i = 0; i < n; ++i) {
    LinearRow lo, hi;
    lo.coeffs.emplace_back(i, Rational(1));
    lo.rel = Relation::GreaterEq;
    lo.rhs = 0;
    hi.coeffs.emplace_back(i, Rational(1));
    hi.rel = Relation::LessEq;
    hi.rhs = 1;
    lp.rows.push_back(std::move(lo));
    lp.rows.push_back(std::move(hi));
  }
  for (auto [u, v] : g.edges()) {
    LinearRow r;
    r.coeffs.emplace_back(u, Rational(1));
    r.coeffs.emplace_back(v, Rational(1));
    r.rel = Relation::LessEq;
    r.rhs = 1;
    lp.rows.push_back(std::move(r));
  }
  return lp;
}

// Variable order for the SA lift: all subsets of size <= ell+1 in
// (size, mask) order; index 0 is the empty set.
struct SaLpIndex {
  std::vector<std::uint64_t> subsets;
  std::map<std::uint64_t, int> index;
};

inline SaLpIndex sa_variable_index(int n, int ell) {
  SaLpIndex ix;
  ix.subsets = detail::subsets_up_to(n, ell + 1);
  for (int i = 0; i < (int)ix.subsets.size(); ++i) ix.index[ix.subsets[i]] = i;
  return ix;
}

// Explicit LP for SA+_ell on QSTAB(g): maximize the singleton sum subject to
// the junta, per-vertex junta, and maximal-clique junta constraints over all
// disjoint (S,T) with |S u T| <= ell, plus y_empty = 1. Identical rows are
// emitted once.
inline LinearProgram sa_lp(const Graph& g, int ell,
                           std::size_t var_guard = 20000) {
  int n = (int)g.vertex_count();
  SaLpIndex ix = sa_variable_index(n, ell);
  if (ix.subsets.size() > var_guard)
    throw guard_error("sa_lp: " + std::to_string(ix.subsets.size()) +
                      " subset variables exceed the guard of " +
                      std::to_string(var_guard));
  LinearProgram lp;
  lp.num_vars = (int)ix.subsets.size();
  lp.objective.assign(lp.num_vars, Rational(0));
  for (int v = 0; v < n; ++v) lp.objective[ix.index.at(1ull << v)] = 1;

  {
    LinearRow norm;
    norm.coeffs.emplace_back(ix.index.at(0), Rational(1));
    norm.rel = Relation::Equal;
    norm.rhs = 1;
    lp.rows.push_back(std::move(norm));
  }

  auto cliques = maximal_cliques(g);
  std::set<std::vector<std::pair<int, Rational>>> seen;
  auto push_geq0 = [&](std::map<int, Rational>&& terms) {
    LinearRow r;
    for (auto& [j, c] : terms)
      if (sgn(c) != 0) r.coeffs.emplace_back(j, c);
    if (r.coeffs.empty()) return;
    if (!seen.insert(r.coeffs).second) return;  // duplicate row
    r.rel = Relation::GreaterEq;
    r.rhs = 0;
    lp.rows.push_back(std::move(r));
  };
  auto add_junta = [&](std::map<int, Rational>& terms, std::uint64_t S,
                       std::uint64_t T, std::uint64_t extra, int sign) {
    std::uint64_t sub = T;
    for (;;) {
      int s = (std::popcount(sub) % 2 ? -1 : 1) * sign;
      terms[ix.index.at(S | sub | extra)] += s;
      if (sub == 0) break;
      sub = (sub - 1) & T;
    }
  };

  for (std::uint64_t u : detail::subsets_up_to(n, ell)) {
    std::uint64_t S = u;
    for (;;) {
      std::uint64_t T = u & ~S;
      {
        std::map<int, Rational> terms;
        add_junta(terms, S, T, 0, 1);
        push_geq0(std::move(terms));
      }
      for (int i = 0; i < n; ++i) {
        std::map<int, Rational> terms;
        add_junta(terms, S, T, 1ull << i, 1);
        push_geq0(std::move(terms));
      }
      for (const auto& q : cliques) {
        std::map<int, Rational> terms;
        add_junta(terms, S, T, 0, 1);
        for (int i : q) add_junta(terms, S, T, 1ull << i, -1);
        push_geq0(std::move(terms));
      }
      if (S == 0) break;
      S = (S - 1) & u;
    }
  }
  return lp;
}

// --- Distribution moments and SoS checks ------------------------------------

// Genuine moments of a distribution over independent sets of g:
// z_I = probability that the drawn set contains I, for all |I| <= level.
inline PseudoMoment moments_from_distribution(
    const std::vector<std::pair<std::vector<int>, Rational>>& supports,
    int level, const Graph& g) {
  Rational total = 0;
  for (const auto& [set, p] : supports) {
    if (p < 0) throw std::invalid_argument("negative probability");
    if (!is_independent_set(g, set))
      throw std::invalid_argument("support set is not independent");
    total += p;
  }
  if (total != 1)
    throw std::invalid_argument("probabilities sum to " +
                                format_rational(total) + ", not 1");
  PseudoMoment z;
  z.level = level;
  int n = (int)g.vertex_count();
  for (std::uint64_t s : detail::subsets_up_to(n, level)) z.entries[s] = 0;
  for (const auto& [set, p] : supports) {
    std::uint64_t m = detail::vec_to_mask(set);
    for (auto& [s, val] : z.entries)
      if ((s & m) == s) val += p;
  }
  return z;
}

struct SosDiagnostics {
  bool psd = true;
  double min_eigenvalue = 0;          // most negative seen across matrices
  std::string worst_matrix;           // "moment" or "edge (i,j)"
  std::vector<double> edge_min_eigs;  // per edge, in edge order
  double moment_min_eig = 0;
};

namespace detail {

inline double min_eigenvalue(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace detail

// Level-t SoS feasibility check on given moments: the moment matrix
// M_t(z) = (z_{I u J}) and every edge-slack matrix
// M^{ij}_t(z) = (z_{I u J} - z_{I u J u i} - z_{I u J u j}) over |I|,|J| <= t
// must be PSD, tested in floating point with a relative eigenvalue
// threshold. Entries up to size 2t+1 may be referenced (the union with the
// edge endpoint); missing entries are errors.
inline std::pair<bool, SosDiagnostics> sos_check(const PseudoMoment& z, int t,
                                                 const Graph& g,
                                                 double tolerance = 1e-9) {
  int n = (int)g.vertex_count();
  auto idx = detail::subsets_up_to(n, t);
  int d = (int)idx.size();
  SosDiagnostics diag;

  double max_abs = 0;
  Eigen::MatrixXd M(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double v = rational_to_double(z.at(idx[a] | idx[b]));
      M(a, b) = v;
      max_abs = std::max(max_abs, std::abs(v));
    }
  diag.moment_min_eig = detail::min_eigenvalue(M);
  diag.min_eigenvalue = diag.moment_min_eig;
  diag.worst_matrix = "moment";

  for (auto [i, j] : g.edges()) {
    Eigen::MatrixXd E(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        std::uint64_t u = idx[a] | idx[b];
        double v = rational_to_double(z.at(u)) -
                   rational_to_double(z.at(u | (1ull << i))) -
                   rational_to_double(z.at(u | (1ull << j)));
        E(a, b) = v;
        max_abs = std::max(max_abs, std::abs(v));
      }
    double e = detail::min_eigenvalue(E);
    diag.edge_min_eigs.push_back(e);
    if (e < diag.min_eigenvalue) {
      diag.min_eigenvalue = e;
      diag.worst_matrix =
          "edge (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  diag.psd = diag.min_eigenvalue >= -tolerance * (1 + max_abs);
  return {diag.psd, diag};
}

// Projection to the original variables: the vector of singleton moments.
inline FractionalPoint projection(const PseudoMoment& y, int n) {
  FractionalPoint x;
  for (int v = 0; v < n; ++v) x.values.push_back(y.at(1ull << v));
  return x;
}

}  // namespace clawbench
