#include <doctest.h>

#include "clawbench/baselines.hpp"
#include "clawbench/json_io.hpp"
#include "clawbench/ramsey.hpp"
#include "clawbench/relaxations.hpp"
#include "test_util.hpp"

using namespace clawbench;

TEST_CASE("junta values") {
  auto c5 = cycle_graph(5);
  PseudoMoment y = uniform_pseudo_moment(c5, 1);
  using V = std::vector<int>;
  CHECK(junta_value(y, V{}, V{}) == 1);
  // singletons are 1/(omega + ell) = 1/3 on C5 at level 1
  CHECK(junta_value(y, V{0}, V{}) == Rational(1, 3));
  CHECK(junta_value(y, V{}, V{1, 2}) == 1 - Rational(2, 3));

  // omega = 3, ell = 2: J_{empty,{t1,t2}} = 1 - 2/5
  PseudoMoment y2 = uniform_pseudo_moment(paley17(), 2);
  CHECK(junta_value(y2, V{}, V{3, 7}) == Rational(3, 5));

  CHECK_THROWS_AS(junta_value(y, V{0}, V{0}), std::invalid_argument);
  PseudoMoment sparse;
  sparse.entries[0] = 1;
  CHECK_THROWS_WITH_AS(junta_value(sparse, V{2}, V{}),
                       doctest::Contains("{2}"), std::runtime_error);
}

TEST_CASE("uniform pseudo-moment values") {
  PseudoMoment k1 = uniform_pseudo_moment(Graph(1), 1);
  CHECK(k1.at(1) == Rational(1, 2));  // omega = 1
  PseudoMoment p = uniform_pseudo_moment(paley17(), 1);
  CHECK(p.at(1ull << 5) == Rational(1, 4));  // omega = 3
  // omega_bound overrides the exact computation
  PseudoMoment b = uniform_pseudo_moment(cycle_graph(5), 1, 4);
  CHECK(b.at(1) == Rational(1, 5));
}

TEST_CASE("sa_feasible accepts the uniform point") {
  auto c5 = cycle_graph(5);
  CHECK(sa_feasible(uniform_pseudo_moment(c5, 1), 1, c5).feasible);
  CHECK(sa_feasible(uniform_pseudo_moment(c5, 2), 2, c5).feasible);
}

TEST_CASE("sa_feasible flags the overfull point") {
  Graph k2 = complete_graph(2);
  PseudoMoment y;
  y.level = 2;
  y.entries[0b00] = 1;
  y.entries[0b01] = 1;
  y.entries[0b10] = 1;
  y.entries[0b11] = 0;
  auto r = sa_feasible(y, 1, k2);
  REQUIRE(!r.feasible);
  CHECK(r.violation->constraint == "clique");
  CHECK(r.violation->clique == std::vector<int>{0, 1});
  CHECK(r.violation->value < 0);
}

TEST_CASE("uniform point is SA-feasible on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testutil::random_graph(2 + (int)(rng() % 8), 0.5, rng);
    int ell = 1 + (int)(rng() % 2);
    CHECK(sa_feasible(uniform_pseudo_moment(g, ell), ell, g).feasible);
  }
}

TEST_CASE("qstab and kg membership") {
  auto c5 = cycle_graph(5);
  FractionalPoint zeros{std::vector<Rational>(5, Rational(0))};
  CHECK(qstab_feasible(zeros, c5).feasible);
  CHECK(kg_feasible(zeros, c5).feasible);

  FractionalPoint ind{std::vector<Rational>{1, 0, 1, 0, 0}};
  CHECK(qstab_feasible(ind, c5).feasible);
  CHECK(kg_feasible(ind, c5).feasible);

  FractionalPoint ones{std::vector<Rational>(5, Rational(1))};
  auto kg = kg_feasible(ones, c5);
  REQUIRE(!kg.feasible);
  CHECK(kg.violated_edge == std::make_pair(0, 1));
  CHECK(!qstab_feasible(ones, c5).feasible);

  // all-half on a clique is edge-feasible but clique-infeasible
  auto k4 = complete_graph(4);
  FractionalPoint half{std::vector<Rational>(4, Rational(1, 2))};
  CHECK(kg_feasible(half, k4).feasible);
  CHECK(!qstab_feasible(half, k4).feasible);
}

TEST_CASE("qstab bad point") {
  auto p = paley17();
  FractionalPoint x = qstab_bad_point(p, 4);
  CHECK(qstab_feasible(x, p).feasible);
  Rational objective = 0;
  for (const auto& v : x.values) objective += v;
  CHECK(objective == Rational(17, 4));

  FractionalPoint c = qstab_bad_point(cycle_graph(5), 3);
  Rational obj2 = 0;
  for (const auto& v : c.values) obj2 += v;
  CHECK(obj2 == Rational(5, 3));

  CHECK(qstab_bad_point(Graph(1), 2).values[0] == Rational(1, 2));
  CHECK_THROWS_AS(qstab_bad_point(paley17(), 3), std::invalid_argument);
}

TEST_CASE("sa lp at level zero collapses to qstab") {
  auto c5 = cycle_graph(5);
  auto sa0 = lp_solve_exact(sa_lp(c5, 0));
  REQUIRE(sa0.status == LpStatus::Optimal);
  CHECK(sa0.value == Rational(5, 2));
  CHECK(sa0.value == lp_solve_exact(qstab_lp(c5, unit_weights(5))).value);
}

TEST_CASE("sa lp level one tightens C5 to the integer optimum") {
  auto c5 = cycle_graph(5);
  auto sa1 = lp_solve_exact(sa_lp(c5, 1));
  REQUIRE(sa1.status == LpStatus::Optimal);
  CHECK(sa1.value >= Rational(5, 3));        // uniform point value n/(w+l)
  CHECK(sa1.value <= Rational(5, 2));        // hierarchy monotonicity
  CHECK(sa1.value >= 2);                     // alpha lower-bounds every level
}

TEST_CASE("sa lp variable guard") {
  CHECK_THROWS_AS(sa_lp(complete_graph(30), 3, 100), guard_error);
}

TEST_CASE("distribution moments") {
  auto c5 = cycle_graph(5);
  SUBCASE("point mass on the empty set") {
    auto z = moments_from_distribution({{{}, Rational(1)}}, 2, c5);
    CHECK(z.at(0) == 1);
    CHECK(z.at(0b1) == 0);
    CHECK(z.at(0b101) == 0);
  }
  SUBCASE("uniform over the five maximum independent sets") {
    std::vector<std::pair<std::vector<int>, Rational>> supports;
    for (int i = 0; i < 5; ++i)
      supports.push_back({{i, (i + 2) % 5}, Rational(1, 5)});
    auto z = moments_from_distribution(supports, 2, c5);
    for (int v = 0; v < 5; ++v) CHECK(z.at(1ull << v) == Rational(2, 5));
    CHECK(z.at(0b011) == 0);  // adjacent pair never drawn
    CHECK(z.at(0b101) == Rational(1, 5));
  }
  SUBCASE("half-half mixture") {
    Graph k2 = complete_graph(2);
    auto z = moments_from_distribution(
        {{{0}, Rational(1, 2)}, {{1}, Rational(1, 2)}}, 2, k2);
    CHECK(z.at(0b01) == Rational(1, 2));
    CHECK(z.at(0b10) == Rational(1, 2));
    CHECK(z.at(0b11) == 0);
  }
  SUBCASE("rejects non-distributions and dependent supports") {
    CHECK_THROWS_AS(
        moments_from_distribution({{{}, Rational(1, 2)}}, 1, c5),
        std::invalid_argument);
    CHECK_THROWS_AS(
        moments_from_distribution({{{0, 1}, Rational(1)}}, 1, c5),
        std::invalid_argument);
  }
}

TEST_CASE("sos check") {
  SUBCASE("distribution moments are PSD") {
    auto c5 = cycle_graph(5);
    std::vector<std::pair<std::vector<int>, Rational>> supports;
    for (int i = 0; i < 5; ++i)
      supports.push_back({{i, (i + 2) % 5}, Rational(1, 5)});
    auto z = moments_from_distribution(supports, 3, c5);
    auto [ok, diag] = sos_check(z, 1, c5);
    CHECK(ok);
    CHECK(diag.min_eigenvalue >= -1e-9);
  }
  SUBCASE("edge-slack matrix catches double occupation") {
    Graph k2 = complete_graph(2);
    PseudoMoment z;
    z.level = 3;
    for (std::uint64_t m : {0b00ull, 0b01ull, 0b10ull, 0b11ull})
      z.entries[m] = 1;
    auto [ok, diag] = sos_check(z, 1, k2);
    CHECK(!ok);
    CHECK(diag.worst_matrix == "edge (0,1)");
  }
  SUBCASE("trivial moment vector passes at level two") {
    Graph k2 = complete_graph(2);
    PseudoMoment z;
    z.level = 5;
    for (std::uint64_t m : {0b00ull, 0b01ull, 0b10ull, 0b11ull})
      z.entries[m] = m == 0 ? 1 : 0;
    auto [ok, diag] = sos_check(z, 2, k2);
    CHECK(ok);
  }
}

TEST_CASE("projection") {
  auto c5 = cycle_graph(5);
  auto x = projection(uniform_pseudo_moment(c5, 1), 5);
  for (const auto& v : x.values) CHECK(v == Rational(1, 3));

  auto z = moments_from_distribution(
      {{{0, 2}, Rational(1)}}, 2, c5);  // point mass on {0,2}
  auto ind = projection(z, 5);
  CHECK(ind.values == std::vector<Rational>{1, 0, 1, 0, 0});
}

TEST_CASE("pseudo-moment and point JSON round-trips") {
  auto c5 = cycle_graph(5);
  PseudoMoment y = uniform_pseudo_moment(c5, 1);
  auto j = pseudo_moment_to_json(y);
  PseudoMoment back = pseudo_moment_from_json(j);
  CHECK(back.level == y.level);
  CHECK(back.entries == y.entries);

  FractionalPoint x{{Rational(17, 12), Rational(0), Rational(1)}};
  auto jx = fractional_point_to_json(x);
  CHECK(jx["values"][0] == "17/12");
  CHECK(fractional_point_from_json(jx).values == x.values);
}

TEST_CASE("rational text round-trip") {
  CHECK(format_rational(parse_rational("34/24")) == "17/12");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("5")) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(rational_ceil_long(Rational(17, 4)) == 5);
  CHECK(rational_ceil_long(Rational(-17, 4)) == -4);
  CHECK(rational_ceil_long(Rational(8, 2)) == 4);
}
