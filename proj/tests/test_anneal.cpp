#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anneal.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace fracdef;

namespace {

AnnealConfig quick(std::uint64_t seed, int k = 2) {
  AnnealConfig cfg;
  cfg.k = k;
  cfg.iterations = 20'000;
  cfg.restarts = 3;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  AnnealConfig bad = quick(1);
  bad.cooling_rate = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = quick(1);
  bad.move_scale = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = quick(1);
  bad.k = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = quick(1);
  bad.initial_temperature = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = quick(1);
  bad.snap_max_denominator = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("identical config means identical result") {
  auto g = wheel(5);
  auto a = anneal(g, quick(42));
  auto b = anneal(g, quick(42));
  CHECK(a.best_float_defect == b.best_float_defect);
  CHECK(a.snapped_coloring == b.snapped_coloring);
  CHECK(a.certified_defect == b.certified_defect);
  CHECK(a.trace == b.trace);

  auto c = anneal(g, quick(43));
  CHECK((c.trace != a.trace));  // different stream
}

TEST_CASE("parallel restarts match serial bit for bit") {
  auto g = hajos();
  auto serial = anneal(g, quick(7));
  auto cfg = quick(7);
  cfg.threads = 3;
  auto parallel = anneal(g, cfg);
  CHECK(serial.best_float_defect == parallel.best_float_defect);
  CHECK(serial.snapped_coloring == parallel.snapped_coloring);
  CHECK(serial.trace == parallel.trace);
}

TEST_CASE("bipartite optimum is found and certified at zero") {
  auto g = cycle(4);
  auto res = anneal(g, quick(5));
  CHECK(res.certified_defect == Rational(0));
}

TEST_CASE("trace has one entry per restart") {
  auto res = anneal(cycle(5), quick(9));
  CHECK(res.trace.size() == 3);
}

TEST_CASE("snapped rows lie exactly on the simplex") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 30; ++i) {
    auto g = oracles::random_graph(rng);
    int k = 2 + static_cast<int>(rng() % 3);
    AnnealConfig cfg = quick(rng(), k);
    cfg.iterations = 2'000;
    cfg.snap_max_denominator = 1 + static_cast<long>(rng() % 40);
    auto res = anneal(g, cfg);
    for (int v = 0; v < g.order(); ++v) {
      Rational sum(0);
      for (int j = 0; j < k; ++j) {
        CHECK(res.snapped_coloring.usage(v, j) >= Rational(0));
        sum += res.snapped_coloring.usage(v, j);
      }
      CHECK(sum == Rational(1));
    }
  }
}

TEST_CASE("certified result never beats the exact optimum") {
  for (const auto& g : oracles::small_corpus()) {
    auto exact = min_defect_2(g);
    auto res = anneal(g, quick(11));
    CHECK(res.certified_defect >= exact.value);
  }
}

TEST_CASE("the float objective is close to the certified defect") {
  auto res = anneal(complete(3), quick(13));
  // both should sit at the K_3 optimum of 1
  CHECK(res.certified_defect == Rational(1));
}

TEST_CASE("baseline: already-optimal K_3 coloring is kept") {
  auto g = complete(3);
  auto baseline = FractionalColoring::from_red_usages(
      {Rational(1), Rational(0), Rational(1)});
  auto res = seeded_anneal_with_baseline(g, quick(17), baseline);
  CHECK(res.certified_defect == Rational(1));
}

TEST_CASE("baseline: replicated C_5 coloring certifies C_5[2K_1] at exactly 2") {
  auto fam = formula_odd_cycle_composition(5, 0);
  auto res = seeded_anneal_with_baseline(fam.instance, quick(19), *fam.construction);
  CHECK(res.certified_defect == Rational(2));
}

TEST_CASE("baseline: fan construction keeps F_9 at most 3/2") {
  auto fam = formula_fan(9);
  auto res = seeded_anneal_with_baseline(fam.instance, quick(23), *fam.construction);
  CHECK(res.certified_defect <= Rational(3, 2));
}

TEST_CASE("baseline: rooks parity coloring keeps K_4 [] K_4 at most 2") {
  auto g = cartesian_product(complete(4), complete(4));
  auto baseline = rooks_parity_coloring(4, 4);
  auto res = seeded_anneal_with_baseline(g, quick(29), baseline);
  CHECK(res.certified_defect <= Rational(2));
}

TEST_CASE("K_3 [] K_5 regression: pinned seed beats the parity bound") {
  auto g = cartesian_product(complete(3), complete(5));
  AnnealConfig cfg;  // default budget
  cfg.seed = 21;
  cfg.snap_max_denominator = 13;
  auto res = anneal(g, cfg);
  // hard floor: never worse than the parity-coloring fallback
  CHECK(res.certified_defect <= Rational(3));
  // target is the explicit-matrix value; a miss is a regression flag, not a failure
  if (res.certified_defect > Rational(38, 13)) {
    MESSAGE("search underperformed the 38/13 matrix: certified ",
            res.certified_defect.str());
  }
}

TEST_CASE("baseline dimension checks") {
  auto g = complete(3);
  auto wrong = FractionalColoring::from_red_usages({Rational(1), Rational(0)});
  CHECK_THROWS_AS(seeded_anneal_with_baseline(g, quick(1), wrong), std::invalid_argument);
}
