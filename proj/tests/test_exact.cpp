#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace fracdef;

TEST_CASE("pinned minimum defects") {
  CHECK(min_defect_2(complete(3)).value == Rational(1));
  CHECK(min_defect_2(cycle(5)).value == Rational(1));
  CHECK(min_defect_2(cycle(4)).value == Rational(0));
  CHECK(min_defect_2(path(5)).value == Rational(0));
  CHECK(min_defect_2(hajos()).value == Rational(4, 3));
  CHECK(min_defect_2(fan(3)).value == Rational(1));
  CHECK(min_defect_2(wheel(4)).value == Rational(4, 3));
}

TEST_CASE("witness certifies the reported value") {
  for (const auto& g : oracles::small_corpus()) {
    auto res = min_defect_2(g);
    CHECK(evaluate(g, res.witness).max_defect == res.value);
  }
}

TEST_CASE("zero-or-one law on random graphs") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 60; ++i) {
    auto g = oracles::random_graph(rng);
    auto res = min_defect_2(g);
    CHECK((res.value == Rational(0) || res.value >= Rational(1)));
    CHECK((res.value == Rational(0)) == g.is_bipartite());
  }
}

TEST_CASE("pruned and unpruned runs agree") {
  SolveOptions no_prune;
  no_prune.prune = false;
  for (const auto& g : oracles::small_corpus()) {
    auto a = min_defect_2(g);
    auto b = min_defect_2(g, no_prune);
    CHECK(a.value == b.value);
  }
  std::mt19937_64 rng(71);
  for (int i = 0; i < 25; ++i) {
    auto g = oracles::random_graph(rng);
    CHECK(min_defect_2(g).value == min_defect_2(g, no_prune).value);
  }
}

TEST_CASE("thread counts do not change the value") {
  SolveOptions two;
  two.threads = 2;
  SolveOptions four;
  four.threads = 4;
  for (const auto& g : {hajos(), wheel(5), complete_multipartite({1, 2, 3})}) {
    auto serial = min_defect_2(g);
    CHECK(min_defect_2(g, two).value == serial.value);
    CHECK(min_defect_2(g, four).value == serial.value);
  }
}

TEST_CASE("grid search gives an upper band and matches on grid-friendly optima") {
  for (const auto& g : oracles::small_corpus()) {
    if (g.order() > 6) continue;
    auto exact = min_defect_2(g);
    auto grid = oracles::grid_min_defect_2(g, 6);
    CHECK(grid >= exact.value);
    bool grid_friendly = true;
    for (const auto& r : exact.witness.red_usages())
      if (!(Rational(6) * r).is_integer()) grid_friendly = false;
    if (grid_friendly) CHECK(grid == exact.value);
  }
}

TEST_CASE("induced subgraph monotonicity") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    auto g = oracles::random_graph(rng, 7, 12);
    if (g.order() < 4) continue;
    auto whole = min_defect_2(g).value;
    // random induced subgraph
    std::vector<int> keep;
    std::vector<int> fresh(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
      if (rng() % 2) {
        fresh[v] = static_cast<int>(keep.size());
        keep.push_back(v);
      }
    if (keep.size() < 2) continue;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
      if (fresh[u] >= 0 && fresh[v] >= 0) edges.emplace_back(fresh[u], fresh[v]);
    auto h = Graph::from_edges(static_cast<int>(keep.size()), std::move(edges));
    CHECK(min_defect_2(h).value <= whole);
  }
}

TEST_CASE("edge cap is enforced with the cap in the message") {
  auto big = cartesian_product(complete(3), complete(4));  // 30 edges
  CHECK_THROWS_AS(min_defect_2(big), CapError);
  SolveOptions small;
  small.edge_cap = 5;
  try {
    min_defect_2(complete(4), small);
    FAIL("expected cap error");
  } catch (const CapError& e) {
    CHECK(std::string(e.what()).find("5") != std::string::npos);
  }
}

TEST_CASE("counters on an unpruned C_4 run") {
  SolveOptions no_prune;
  no_prune.prune = false;
  auto res = min_defect_2(cycle(4), no_prune);
  CHECK(res.counters.orientations_enumerated == 14);
  CHECK(res.counters.lps_solved == 14);
  CHECK(res.counters.orientations_pruned == 0);
  CHECK(res.value == Rational(0));
}

TEST_CASE("min_total_defect: pinned values and the oracle") {
  CHECK(min_total_defect(complete(5), 2).value == Rational(8));
  CHECK(min_total_defect(cycle(5), 2).value == Rational(2));
  CHECK(min_total_defect(Graph::from_edges(4, {}), 3).value == Rational(0));

  std::mt19937_64 rng(79);
  for (int i = 0; i < 25; ++i) {
    auto g = oracles::random_graph(rng, 6, 10);
    int k = 2 + static_cast<int>(rng() % 2);
    auto res = min_total_defect(g, k);
    CHECK(res.value == Rational(oracles::brute_total_defect(g, k)));
    CHECK(evaluate(g, res.witness).total_defect == res.value);
  }
}

TEST_CASE("min_total_defect is invariant under the symmetry cut") {
  SolveOptions plain;
  plain.symmetry_cut = false;
  std::mt19937_64 rng(83);
  for (int i = 0; i < 15; ++i) {
    auto g = oracles::random_graph(rng, 6, 10);
    int k = 2 + static_cast<int>(rng() % 2);
    CHECK(min_total_defect(g, k).value == min_total_defect(g, k, plain).value);
  }
}

TEST_CASE("min_defect_monochromatic: pinned values and the oracle") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= 3; ++k)
      CHECK(min_defect_monochromatic(complete(n), k).value ==
            Rational((n + k - 1) / k - 1));
  CHECK(min_defect_monochromatic(fan(6), 2).value ==
        Rational(oracles::brute_mono_max_defect(fan(6), 2)));
  CHECK(min_defect_monochromatic(fan(6), 2).value == Rational(2));
  CHECK(min_defect_monochromatic(cycle(6), 2).value == Rational(0));  // bipartite

  std::mt19937_64 rng(89);
  for (int i = 0; i < 25; ++i) {
    auto g = oracles::random_graph(rng, 6, 10);
    int k = 2 + static_cast<int>(rng() % 2);
    CHECK(min_defect_monochromatic(g, k).value ==
          Rational(oracles::brute_mono_max_defect(g, k)));
  }
}

TEST_CASE("monochromatic optimum dominates the fractional one") {
  for (const auto& g : oracles::small_corpus())
    CHECK(min_defect_monochromatic(g, 2).value >= min_defect_2(g).value);
}

TEST_CASE("coloring cap fails loudly") {
  SolveOptions tight;
  tight.coloring_cap = 100;
  CHECK_THROWS_AS(min_total_defect(complete(8), 3, tight), CapError);
}

TEST_CASE("user prune threshold tightens the search") {
  // F_6 has optimum 4/3; a valid threshold of 2 keeps the result exact.
  SolveOptions opts;
  opts.prune_threshold = Rational(2);
  auto res = min_defect_2(fan(6), opts);
  CHECK(res.value == Rational(4, 3));
}
