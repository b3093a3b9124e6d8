#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clawbench/rational.hpp"

namespace clawbench {

// Sparse exact-rational linear program, sense = maximize. Variables are
// free; sign restrictions are expressed as explicit rows.
enum class Relation { LessEq, Equal, GreaterEq };

struct LinearRow {
  std::vector<std::pair<int, Rational>> coeffs;  // (variable, coefficient)
  Relation rel = Relation::LessEq;
  Rational rhs = 0;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<LinearRow> rows;
  std::vector<Rational> objective;  // size num_vars

  void check() const {
    if ((int)objective.size() != num_vars)
      throw std::invalid_argument("objective width mismatch");
    for (const auto& r : rows)
      for (const auto& [j, c] : r.coeffs)
        if (j < 0 || j >= num_vars)
          throw std::invalid_argument("row coefficient out of range");
  }
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value = 0;
  std::vector<Rational> x;
};

namespace detail {

// Dense two-phase tableau simplex on the computational standard form
//   min cost . x   s.t.  T x = rhs,  x >= 0
// with Dantzig pivoting and a Bland anti-cycling fallback. Artificial columns
// occupy the tail; they are barred from entering in phase 2 and their final
// reduced costs expose the row multipliers.
class StandardSimplex {
 public:
  int m = 0;           // rows
  int n_struct = 0;    // structural columns
  std::vector<std::vector<Rational>> T;  // m x (ncols+1), last col = rhs
  std::vector<Rational> cost;            // phase-2 cost, structural only

  enum class Result { Optimal, Infeasible, Unbounded };

  Result solve() {
    int ncols = n_struct + m;
    basis_.resize(m);
    dropped_.assign(m, false);
    // append artificial identity; flip rows to make rhs nonnegative first
    for (int i = 0; i < m; ++i) {
      if (sgn(T[i][n_struct]) < 0)
        for (auto& v : T[i]) v = -v;
      // note: rhs currently sits at index n_struct (caller layout)
    }
    for (int i = 0; i < m; ++i) {
      Rational rhs = T[i][n_struct];
      T[i].resize(ncols + 1, Rational(0));
      T[i][ncols] = rhs;
      T[i][n_struct] = 0;
      T[i][n_struct + i] = 1;
      basis_[i] = n_struct + i;
    }
    rhs_col_ = ncols;
    ncols_ = ncols;

    // Phase 1: minimize sum of artificials.
    std::vector<Rational> phase1(ncols, Rational(0));
    for (int j = n_struct; j < ncols; ++j) phase1[j] = 1;
    if (!run_phase(phase1, /*allow_artificial=*/true))
      throw std::logic_error("phase 1 cannot be unbounded");
    Rational p1 = objective_value(phase1);
    if (sgn(p1) != 0) return Result::Infeasible;
    purge_artificials();

    std::vector<Rational> phase2(ncols, Rational(0));
    for (int j = 0; j < n_struct; ++j) phase2[j] = cost[j];
    if (!run_phase(phase2, /*allow_artificial=*/false))
      return Result::Unbounded;
    final_cost_ = std::move(phase2);
    return Result::Optimal;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_struct, Rational(0));
    for (int i = 0; i < m; ++i)
      if (!dropped_[i] && basis_[i] < n_struct) x[basis_[i]] = T[i][rhs_col_];
    return x;
  }

  // Multiplier of original row i (w.r.t. the possibly sign-flipped rows the
  // caller handed in is compensated by the caller via flip bookkeeping; here
  // the rows are already rhs>=0 oriented).
  std::vector<Rational> multipliers() const {
    std::vector<Rational> pi(m, Rational(0));
    for (int i = 0; i < m; ++i) {
      if (dropped_[i]) continue;
      pi[i] = -reduced_cost(final_cost_, n_struct + i);
    }
    return pi;
  }

  // Whether row i had its sign flipped to make rhs nonnegative; the caller
  // must query this before solve() mutates nothing else about orientation.
  std::vector<char> flipped;

 private:
  int ncols_ = 0, rhs_col_ = 0;
  std::vector<int> basis_;
  std::vector<char> dropped_;
  std::vector<Rational> final_cost_;

  static int sgn(const Rational& q) { return ::sgn(q); }

  Rational objective_value(const std::vector<Rational>& c) const {
    Rational v = 0;
    for (int i = 0; i < m; ++i)
      if (!dropped_[i]) v += c[basis_[i]] * T[i][rhs_col_];
    return v;
  }

  Rational reduced_cost(const std::vector<Rational>& c, int j) const {
    Rational r = c[j];
    for (int i = 0; i < m; ++i) {
      if (dropped_[i]) continue;
      if (sgn(T[i][j]) != 0) r -= c[basis_[i]] * T[i][j];
    }
    return r;
  }

  // returns false on unboundedness
  bool run_phase(const std::vector<Rational>& c, bool allow_artificial) {
    // maintained reduced-cost row
    std::vector<Rational> zrow(ncols_ + 1, Rational(0));
    for (int j = 0; j <= ncols_; ++j) zrow[j] = c.size() > (size_t)j ? c[j] : Rational(0);
    zrow[ncols_] = 0;
    for (int i = 0; i < m; ++i) {
      if (dropped_[i]) continue;
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= ncols_; ++j)
        if (sgn(T[i][j]) != 0) zrow[j] -= cb * T[i][j];
    }
    // Entering rule: Dantzig (most negative reduced cost) for speed; after a
    // long streak of degenerate pivots switch to Bland's lowest-index rule,
    // which cannot cycle, until the objective moves again. Any infinite run
    // would eventually be all-degenerate and hence all-Bland, so the mix
    // still terminates.
    constexpr int kStallLimit = 64;
    int degenerate_streak = 0;
    for (;;) {
      bool bland = degenerate_streak >= kStallLimit;
      int enter = -1;
      int limit = allow_artificial ? ncols_ : n_struct;
      for (int j = 0; j < limit; ++j) {
        if (sgn(zrow[j]) >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter < 0 || zrow[j] < zrow[enter]) enter = j;
      }
      if (enter < 0) return true;  // optimal for this phase
      int leave = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < m; ++i) {
        if (dropped_[i]) continue;
        if (sgn(T[i][enter]) <= 0) continue;
        Rational ratio = T[i][rhs_col_] / T[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      degenerate_streak = sgn(best_ratio) == 0 ? degenerate_streak + 1 : 0;
      pivot(leave, enter, zrow);
    }
  }

  void pivot(int pr, int pc, std::vector<Rational>& zrow) {
    Rational piv = T[pr][pc];
    for (int j = 0; j <= ncols_; ++j)
      if (sgn(T[pr][j]) != 0) T[pr][j] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == pr || dropped_[i]) continue;
      Rational f = T[i][pc];
      if (sgn(f) == 0) continue;
      for (int j = 0; j <= ncols_; ++j)
        if (sgn(T[pr][j]) != 0) T[i][j] -= f * T[pr][j];
    }
    Rational f = zrow[pc];
    if (sgn(f) != 0)
      for (int j = 0; j <= ncols_; ++j)
        if (sgn(T[pr][j]) != 0) zrow[j] -= f * T[pr][j];
    basis_[pr] = pc;
  }

  // After phase 1: pivot basic artificials out, or drop redundant rows.
  void purge_artificials() {
    for (int i = 0; i < m; ++i) {
      if (dropped_[i] || basis_[i] < n_struct) continue;
      int pc = -1;
      for (int j = 0; j < n_struct; ++j)
        if (sgn(T[i][j]) != 0) {
          pc = j;
          break;
        }
      if (pc < 0) {
        dropped_[i] = true;  // redundant constraint
        continue;
      }
      std::vector<Rational> dummy(ncols_ + 1, Rational(0));
      pivot(i, pc, dummy);
    }
  }
};

struct GeneralSolveOutput {
  StandardSimplex::Result result;
  std::vector<Rational> x;         // values for the lp's free variables
  std::vector<Rational> row_dual;  // multiplier per original row
};

// Solve max c.x over free variables directly: x = xp - xm, slacks per
// inequality, then the standard-form engine.
inline GeneralSolveOutput solve_general_direct(const LinearProgram& lp) {
  int n = lp.num_vars;
  int m = (int)lp.rows.size();
  int slacks = 0;
  for (const auto& r : lp.rows)
    if (r.rel != Relation::Equal) ++slacks;
  StandardSimplex s;
  s.m = m;
  s.n_struct = 2 * n + slacks;
  s.T.assign(m, std::vector<Rational>(s.n_struct + 1, Rational(0)));
  std::vector<char> flip(m, 0);
  int si = 0;
  for (int i = 0; i < m; ++i) {
    const auto& r = lp.rows[i];
    for (const auto& [j, cf] : r.coeffs) {
      s.T[i][j] += cf;
      s.T[i][n + j] -= cf;
    }
    if (r.rel == Relation::LessEq) s.T[i][2 * n + si++] = 1;
    else if (r.rel == Relation::GreaterEq) s.T[i][2 * n + si++] = -1;
    s.T[i][s.n_struct] = r.rhs;
    if (sgn(r.rhs) < 0) flip[i] = 1;  // solve() will negate this row
  }
  s.cost.assign(s.n_struct, Rational(0));
  for (int j = 0; j < n; ++j) {
    s.cost[j] = -lp.objective[j];  // maximize -> minimize
    s.cost[n + j] = lp.objective[j];
  }
  GeneralSolveOutput out;
  out.result = s.solve();
  if (out.result == StandardSimplex::Result::Optimal) {
    auto v = s.primal();
    out.x.resize(n);
    for (int j = 0; j < n; ++j) out.x[j] = v[j] - v[n + j];
    auto pi = s.multipliers();
    out.row_dual.resize(m);
    for (int i = 0; i < m; ++i) out.row_dual[i] = flip[i] ? -pi[i] : pi[i];
  }
  return out;
}

}  // namespace detail

// Exact rational simplex, Dantzig pivoting with Bland's anti-cycling rule as
// the degeneracy fallback. When the row count
// dwarfs the variable count (the Sherali-Adams LPs), the LP is solved through
// its dual, whose standard form is the transposed, much smaller tableau; the
// primal solution is recovered from the dual's row multipliers. Optimal
// solutions are certified by an exact feasibility and objective re-check.
inline LpSolution lp_solve_exact(const LinearProgram& lp) {
  lp.check();
  LpSolution sol;

  auto finish_optimal = [&](std::vector<Rational> x) {
    // certification: exact feasibility of every original row
    for (const auto& r : lp.rows) {
      Rational lhs = 0;
      for (const auto& [j, c] : r.coeffs) lhs += c * x[j];
      bool ok = r.rel == Relation::LessEq    ? lhs <= r.rhs
                : r.rel == Relation::GreaterEq ? lhs >= r.rhs
                                               : lhs == r.rhs;
      if (!ok)
        throw std::logic_error("simplex returned an infeasible point");
    }
    Rational v = 0;
    for (int j = 0; j < lp.num_vars; ++j) v += lp.objective[j] * x[j];
    sol.status = LpStatus::Optimal;
    sol.value = v;
    sol.x = std::move(x);
  };

  bool via_dual = (int)lp.rows.size() > 2 * (lp.num_vars + 1);
  if (!via_dual) {
    auto out = detail::solve_general_direct(lp);
    switch (out.result) {
      case detail::StandardSimplex::Result::Optimal:
        finish_optimal(std::move(out.x));
        return sol;
      case detail::StandardSimplex::Result::Unbounded:
        sol.status = LpStatus::Unbounded;
        return sol;
      case detail::StandardSimplex::Result::Infeasible:
        sol.status = LpStatus::Infeasible;
        return sol;
    }
  }

  // Dual in native standard form: min b.u subject to sum_i u_i a_i = c.
  // One column per primal row (u_i >= 0 natively; >= rows enter negated,
  // equality rows as a +/- pair), one equality row per primal variable. The
  // engine's optimal row multipliers satisfy exactly the primal constraints
  // and maximize c.x, so they are an optimal primal solution.
  {
    detail::StandardSimplex s;
    s.m = lp.num_vars;
    std::vector<std::pair<int, Rational>> col_source;  // (primal row, sign)
    for (int i = 0; i < (int)lp.rows.size(); ++i) {
      Relation rel = lp.rows[i].rel;
      if (rel != Relation::GreaterEq) col_source.emplace_back(i, Rational(1));
      if (rel != Relation::LessEq) col_source.emplace_back(i, Rational(-1));
    }
    s.n_struct = (int)col_source.size();
    s.T.assign(s.m, std::vector<Rational>(s.n_struct + 1, Rational(0)));
    s.cost.assign(s.n_struct, Rational(0));
    for (int c = 0; c < s.n_struct; ++c) {
      const auto& [i, sign] = col_source[c];
      for (const auto& [j, cf] : lp.rows[i].coeffs) s.T[j][c] += sign * cf;
      s.cost[c] = sign * lp.rows[i].rhs;
    }
    std::vector<char> flip(s.m, 0);
    for (int j = 0; j < s.m; ++j) {
      s.T[j][s.n_struct] = lp.objective[j];
      if (sgn(lp.objective[j]) < 0) flip[j] = 1;  // solve() negates this row
    }
    auto result = s.solve();
    if (result == detail::StandardSimplex::Result::Optimal) {
      auto pi = s.multipliers();
      std::vector<Rational> x(lp.num_vars);
      for (int j = 0; j < lp.num_vars; ++j) x[j] = flip[j] ? -pi[j] : pi[j];
      finish_optimal(std::move(x));
      // cross-check strong duality: primal value == dual value
      Rational dual_value = 0;
      auto u = s.primal();
      for (int c = 0; c < s.n_struct; ++c) dual_value += s.cost[c] * u[c];
      if (sol.value != dual_value)
        throw std::logic_error("strong duality check failed");
      return sol;
    }
    if (result == detail::StandardSimplex::Result::Unbounded) {
      sol.status = LpStatus::Infeasible;  // dual unbounded => primal infeasible
      return sol;
    }
  }
  // Dual infeasible: primal is unbounded or infeasible; settle with a direct
  // phase-1 on the primal.
  LinearProgram feas = lp;
  feas.objective.assign(lp.num_vars, Rational(0));
  auto f = detail::solve_general_direct(feas);
  sol.status = f.result == detail::StandardSimplex::Result::Optimal
                   ? LpStatus::Unbounded
                   : LpStatus::Infeasible;
  return sol;
}

}  // namespace clawbench
