#include <doctest.h>

#include "clawbench/baselines.hpp"
#include "clawbench/lp.hpp"
#include "clawbench/relaxations.hpp"

using namespace clawbench;

namespace {

LinearRow row(std::vector<std::pair<int, Rational>> coeffs, Relation rel,
              Rational rhs) {
  LinearRow r;
  r.coeffs = std::move(coeffs);
  r.rel = rel;
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

TEST_CASE("one-variable box") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.rows.push_back(row({{0, 1}}, Relation::LessEq, 1));
  lp.rows.push_back(row({{0, 1}}, Relation::GreaterEq, 0));
  auto sol = lp_solve_exact(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 1);
  CHECK(sol.x[0] == 1);
}

TEST_CASE("unbounded and infeasible statuses") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.rows.push_back(row({{0, 1}}, Relation::GreaterEq, 0));
  CHECK(lp_solve_exact(lp).status == LpStatus::Unbounded);

  lp.rows.push_back(row({{0, 1}}, Relation::LessEq, -1));
  CHECK(lp_solve_exact(lp).status == LpStatus::Infeasible);
}

TEST_CASE("equality constraints and fractional optimum") {
  // max x + y s.t. 2x + y = 3, x - y <= 1, x,y >= 0
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.rows.push_back(row({{0, 2}, {1, 1}}, Relation::Equal, 3));
  lp.rows.push_back(row({{0, 1}, {1, -1}}, Relation::LessEq, 1));
  lp.rows.push_back(row({{0, 1}}, Relation::GreaterEq, 0));
  lp.rows.push_back(row({{1, 1}}, Relation::GreaterEq, 0));
  auto sol = lp_solve_exact(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 3);  // x=0, y=3
}

TEST_CASE("qstab lp on small graphs") {
  auto c5 = cycle_graph(5);
  auto sol = lp_solve_exact(qstab_lp(c5, unit_weights(5)));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(5, 2));

  auto k4 = lp_solve_exact(qstab_lp(complete_graph(4), unit_weights(4)));
  CHECK(k4.value == 1);

  auto k3 = qstab_lp(complete_graph(3), unit_weights(3));
  CHECK(k3.rows.size() == 4);  // one clique row + three nonnegativity rows
  CHECK(lp_solve_exact(k3).value == 1);
}

TEST_CASE("edge lp dominates qstab") {
  auto k4 = complete_graph(4);
  auto edge = lp_solve_exact(kg_lp(k4, unit_weights(4)));
  REQUIRE(edge.status == LpStatus::Optimal);
  CHECK(edge.value == 2);  // all-half point
  auto qstab = lp_solve_exact(qstab_lp(k4, unit_weights(4)));
  CHECK(qstab.value <= edge.value);
}

TEST_CASE("weighted qstab objective") {
  std::vector<Rational> w{Rational(5), Rational(1), Rational(1), Rational(1),
                          Rational(1)};
  auto sol = lp_solve_exact(qstab_lp(cycle_graph(5), w));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == 6);  // integer optimum {0,2} already saturates the LP
}

TEST_CASE("dual route agrees with direct route") {
  // Force the dual path by a tall LP: many redundant copies of C5's rows.
  auto c5 = cycle_graph(5);
  LinearProgram lp = qstab_lp(c5, unit_weights(5));
  LinearProgram tall = lp;
  for (int rep = 0; rep < 10; ++rep)
    for (const auto& r : lp.rows) tall.rows.push_back(r);
  REQUIRE((int)tall.rows.size() > 2 * (tall.num_vars + 1));
  auto sol = lp_solve_exact(tall);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.value == Rational(5, 2));
  for (const auto& v : sol.x) CHECK(v == Rational(1, 2));
}
