#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lp.hpp"
#include "oracles.hpp"

using namespace fracdef;

namespace {

Constraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  return Constraint{std::move(coeffs), rel, std::move(rhs)};
}

}  // namespace

TEST_CASE("min-max toy: t >= x, t >= 1 - x") {
  LinearProgram lp;
  lp.num_vars = 2;  // x, t
  lp.objective = {Rational(0), Rational(1)};
  lp.bounds = {{Rational(0), Rational(1)}, {Rational(0), std::nullopt}};
  lp.constraints.push_back(row({Rational(-1), Rational(1)}, Relation::GreaterEq, Rational(0)));
  lp.constraints.push_back(row({Rational(1), Rational(1)}, Relation::GreaterEq, Rational(1)));
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimal_value == Rational(1, 2));
  CHECK(res.witness[0] == Rational(1, 2));
}

TEST_CASE("infeasible: x >= 3 and x <= 2") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.bounds = {{std::nullopt, std::nullopt}};
  lp.constraints.push_back(row({Rational(1)}, Relation::GreaterEq, Rational(3)));
  lp.constraints.push_back(row({Rational(1)}, Relation::LessEq, Rational(2)));
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded: minimize -x with x >= 0") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(-1)};
  lp.bounds = {{Rational(0), std::nullopt}};
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("equality constraints") {
  // minimize x + y subject to x + 2y = 3, x - y = 0, x,y >= 0
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.bounds = {{Rational(0), std::nullopt}, {Rational(0), std::nullopt}};
  lp.constraints.push_back(row({Rational(1), Rational(2)}, Relation::Equal, Rational(3)));
  lp.constraints.push_back(row({Rational(1), Rational(-1)}, Relation::Equal, Rational(0)));
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.witness[0] == Rational(1));
  CHECK(res.witness[1] == Rational(1));
  CHECK(res.optimal_value == Rational(2));
}

TEST_CASE("negative lower bounds and flipped variables") {
  // minimize x with x in [-5, -2]
  LinearProgram lp;
  lp.num_vars = 1;
  lp.objective = {Rational(1)};
  lp.bounds = {{Rational(-5), Rational(-2)}};
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimal_value == Rational(-5));

  // maximize x (minimize -x) with only an upper bound
  LinearProgram lp2;
  lp2.num_vars = 1;
  lp2.objective = {Rational(-1)};
  lp2.bounds = {{std::nullopt, Rational(7)}};
  auto res2 = solve_lp(lp2);
  REQUIRE(res2.status == LpStatus::Optimal);
  CHECK(res2.witness[0] == Rational(7));
}

TEST_CASE("free variables") {
  // min x + 2y subject to x + y >= -1 and x <= 5, both variables free:
  // optimum -7 at (5, -6)
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(2)};
  lp.bounds = {{std::nullopt, std::nullopt}, {std::nullopt, std::nullopt}};
  lp.constraints.push_back(row({Rational(1), Rational(1)}, Relation::GreaterEq, Rational(-1)));
  lp.constraints.push_back(row({Rational(1), Rational(0)}, Relation::LessEq, Rational(5)));
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimal_value == Rational(-7));
  CHECK(res.witness == std::vector<Rational>{Rational(5), Rational(-6)});

  // dropping the x <= 5 row makes it unbounded along (1, -1)
  lp.constraints.pop_back();
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("Bland's rule survives the classic cycling instance") {
  // min -3/4 a + 150 b - 1/50 c + 6 d
  //   1/4 a - 60 b - 1/25 c + 9 d <= 0
  //   1/2 a - 90 b - 1/50 c + 3 d <= 0
  //   c <= 1, all vars >= 0; optimum -1/20
  LinearProgram lp;
  lp.num_vars = 4;
  lp.objective = {Rational(-3, 4), Rational(150), Rational(-1, 50), Rational(6)};
  lp.bounds.assign(4, {Rational(0), std::nullopt});
  lp.constraints.push_back(row({Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)},
                               Relation::LessEq, Rational(0)));
  lp.constraints.push_back(row({Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)},
                               Relation::LessEq, Rational(0)));
  lp.constraints.push_back(row({Rational(0), Rational(0), Rational(1), Rational(0)},
                               Relation::LessEq, Rational(1)));
  auto res = solve_lp(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimal_value == Rational(-1, 20));
}

TEST_CASE("degenerate ties resolve deterministically") {
  // multiple optimal bases at the same vertex
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1), Rational(1)};
  lp.bounds.assign(2, {Rational(0), std::nullopt});
  lp.constraints.push_back(row({Rational(1), Rational(0)}, Relation::GreaterEq, Rational(1)));
  lp.constraints.push_back(row({Rational(1), Rational(0)}, Relation::GreaterEq, Rational(1)));
  lp.constraints.push_back(row({Rational(0), Rational(1)}, Relation::GreaterEq, Rational(0)));
  auto a = solve_lp(lp);
  auto b = solve_lp(lp);
  REQUIRE(a.status == LpStatus::Optimal);
  CHECK(a.optimal_value == Rational(1));
  CHECK(a.witness == b.witness);
}

TEST_CASE("shape validation") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.objective = {Rational(1)};
  lp.bounds.assign(2, {Rational(0), Rational(1)});
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);

  lp.objective = {Rational(1), Rational(1)};
  lp.bounds = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

TEST_CASE("random boxed LPs: sampled feasible points never beat the optimum") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 1 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    LinearProgram lp;
    lp.num_vars = n;
    lp.bounds.assign(n, {Rational(0), Rational(2)});
    for (int i = 0; i < n; ++i)
      lp.objective.push_back(Rational(static_cast<long>(rng() % 9) - 4));
    for (int r = 0; r < m; ++r) {
      Constraint c;
      for (int i = 0; i < n; ++i)
        c.coeffs.push_back(Rational(static_cast<long>(rng() % 7) - 3));
      c.rel = Relation::LessEq;
      c.rhs = Rational(static_cast<long>(rng() % 9));  // keeps origin feasible
      lp.constraints.push_back(std::move(c));
    }
    auto res = solve_lp(lp);
    REQUIRE(res.status == LpStatus::Optimal);

    // the optimum is a true lower bound over sampled feasible grid points
    for (int s = 0; s < 40; ++s) {
      std::vector<Rational> p;
      for (int i = 0; i < n; ++i) p.push_back(Rational(static_cast<long>(rng() % 5), 2));
      bool feasible = true;
      for (const auto& c : lp.constraints) {
        Rational lhs(0);
        for (int i = 0; i < n; ++i) lhs += c.coeffs[i] * p[i];
        if (!(lhs <= c.rhs)) { feasible = false; break; }
      }
      if (!feasible) continue;
      Rational value(0);
      for (int i = 0; i < n; ++i) value += lp.objective[i] * p[i];
      CHECK(value >= res.optimal_value);
    }

    // witness substitutes exactly (solve_lp verifies; assert the objective too)
    Rational again(0);
    for (int i = 0; i < n; ++i) again += lp.objective[i] * res.witness[i];
    CHECK(again == res.optimal_value);
  }
}
