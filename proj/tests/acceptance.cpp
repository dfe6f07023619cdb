// Acceptance suite: runs every criterion and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "anneal.hpp"
#include "coloring.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "oracles.hpp"

using namespace fracdef;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double limit_seconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > limit_seconds) {
    ok = false;
    error = "exceeded the " + std::to_string(limit_seconds) + "s budget";
  }
  if (!ok) ++g_failures;
  std::printf("%s %-58s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed,
              error.empty() ? "" : " -- ", error.c_str());
  std::fflush(stdout);
}

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(FRACDEF_DATA_DIR) + "/" + name);
  if (!in.good()) throw std::runtime_error("missing data file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Rational fan_formula(long n) {
  long q = n / 3;
  return Rational(2 * q, q + 1);
}

Rational wheel_formula(long n) {
  long q = (n + 2) / 3;
  return Rational(2 * q, q + 1);
}

}  // namespace

int main() {
  std::printf("== acceptance: exact values (criterion 1) ==\n");

  criterion("1.1 D(hajos, 2) = 4/3", 300, [] {
    return min_defect_2(hajos()).value == Rational(4, 3);
  });

  criterion("1.2 D(K_3)=1, D(C_5)=1, D(C_4)=0", 300, [] {
    return min_defect_2(complete(3)).value == Rational(1) &&
           min_defect_2(cycle(5)).value == Rational(1) &&
           min_defect_2(cycle(4)).value == Rational(0);
  });

  criterion("1.3 fans n=3..6: solver equals the formula", 300, [] {
    for (long n = 3; n <= 6; ++n) {
      auto solved = min_defect_2(fan(static_cast<int>(n))).value;
      if (solved != fan_formula(n)) return false;
      if (solved != formula_fan(n).value) return false;
    }
    return true;
  });

  criterion("1.4 wheels n=3..5: solver equals the formula", 300, [] {
    for (long n = 3; n <= 5; ++n) {
      auto solved = min_defect_2(wheel(static_cast<int>(n))).value;
      if (solved != wheel_formula(n)) return false;
      if (solved != formula_wheel(n).value) return false;
    }
    return true;
  });

  criterion("1.5 D(K_3 [] K_3, 2) = 2", 300, [] {
    auto g = cartesian_product(complete(3), complete(3));
    return min_defect_2(g).value == Rational(2);
  });

  criterion("1.6 D(K_{1,2,3}) = 3/2 and D(K_{2,2,2}) = 2", 300, [] {
    return min_defect_2(complete_multipartite({1, 2, 3})).value == Rational(3, 2) &&
           min_defect_2(complete_multipartite({2, 2, 2})).value == Rational(2) &&
           formula_tripartite(1, 2, 3).value == Rational(3, 2) &&
           formula_multipartite_equal(3, 2).value == Rational(2);
  });

  criterion("1.7 TD(K_n, 2) matches the formula for n <= 7", 300, [] {
    for (long n = 1; n <= 7; ++n) {
      long q = n / 2;
      Rational formula(q * (2 * n - 2 - 2 * q));
      if (min_total_defect(complete(static_cast<int>(n)), 2).value != formula)
        return false;
      if (formula_total_complete(n, 2).value != formula) return false;
    }
    return true;
  });

  criterion("1.8 D(K_n, k) = ceil(n/k) - 1 (mono n<=8 k<=4; exact k=2 n<=6)", 300, [] {
    for (long n = 1; n <= 8; ++n)
      for (long k = 1; k <= 4; ++k) {
        Rational formula((n + k - 1) / k - 1);
        if (min_defect_monochromatic(complete(static_cast<int>(n)),
                                     static_cast<int>(k)).value != formula)
          return false;
      }
    for (long n = 2; n <= 6; ++n) {
      Rational formula((n + 1) / 2 - 1);
      if (min_defect_2(complete(static_cast<int>(n))).value != formula) return false;
    }
    return true;
  });

  std::printf("== acceptance: paper matrices (criterion 2) ==\n");

  struct MatrixCase { const char* name; long n; Rational value; };
  const MatrixCase matrices[] = {
      {"2.1 shipped K_3 [] K_5 coloring = 38/13", 5, Rational(38, 13)},
      {"2.2 shipped K_3 [] K_7 coloring = 42/11", 7, Rational(42, 11)},
      {"2.3 shipped K_3 [] K_9 coloring = 14/3", 9, Rational(14, 3)},
  };
  for (const auto& mc : matrices) {
    criterion(mc.name, 1.0, [&] {
      auto g = read_graph(data_file("k3xk" + std::to_string(mc.n) + ".graph"));
      auto c = read_coloring(data_file("k3xk" + std::to_string(mc.n) + ".coloring"), 2);
      return evaluate(g, c).max_defect == mc.value;
    });
  }

  std::printf("== acceptance: lower bounds (criterion 3) ==\n");

  criterion("3.1 rooks_lower_bound(3,3) = 4/3 <= 2 = exact", 300, [] {
    // The formula (both sides odd) reads (m+n)/2 - 2 + 1/(2m) + 1/(2n),
    // which is 4/3 at (3,3); the criterion's literal "5/3" miscomputes its
    // own derivation 3 - 2 + 1/6 + 1/6 and is not reproducible.
    auto lower = rooks_lower_bound(3, 3);
    if (lower != Rational(4, 3)) return false;
    auto exact = min_defect_2(cartesian_product(complete(3), complete(3))).value;
    return lower <= exact && exact == Rational(2);
  });

  criterion("3.2 rooks_lower_bound <= best known upper bound, m,n <= 9", 300, [] {
    for (long m = 1; m <= 9; ++m)
      for (long n = 1; n <= 9; ++n)
        if (rooks_lower_bound(m, n) > rooks_bound(m, n).value) return false;
    return true;
  });

  std::printf("== acceptance: property suites (criterion 4) ==\n");

  criterion("4.1 zero-or-one law, 200 random graphs (<= 12 edges)", 300, [] {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
      auto g = oracles::random_graph(rng, 7, 12);
      auto value = min_defect_2(g).value;
      if (!(value == Rational(0) || value >= Rational(1))) return false;
      if ((value == Rational(0)) != g.is_bipartite()) return false;
    }
    return true;
  });

  criterion("4.2 orientation soundness on 200 random 2-colorings", 300, [] {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
      auto g = oracles::random_graph(rng);
      auto c = oracles::random_coloring(rng, g.order(), 2);
      auto o = induced_orientation(g, c);
      if (!o.certified_acyclic()) return false;
      auto r = c.red_usages();
      std::vector<std::vector<int>> ins(g.order()), outs(g.order());
      for (auto [tail, head] : o.arcs) {
        outs[tail].push_back(head);
        ins[head].push_back(tail);
      }
      auto report = evaluate(g, c);
      for (int v = 0; v < g.order(); ++v) {
        Rational lin = Rational(static_cast<long>(outs[v].size())) * r[v] +
                       Rational(static_cast<long>(ins[v].size())) * (Rational(1) - r[v]);
        for (int w : ins[v]) lin += r[w];
        for (int w : outs[v]) lin += Rational(1) - r[w];
        if (lin != report.per_vertex[v]) return false;
      }
    }
    return true;
  });

  criterion("4.3 transforms never worsen their objective (200 cases)", 300, [] {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 200; ++i) {
      auto g = oracles::random_graph(rng);
      int k = 2 + static_cast<int>(rng() % 3);
      auto c = oracles::random_coloring(rng, g.order(), k);
      auto before = evaluate(g, c);
      auto mono = make_monochromatic_total(g, c);
      if (!mono.all_monochromatic()) return false;
      if (evaluate(g, mono).total_defect > before.total_defect) return false;
      if (g.order() >= k) {
        auto reps = ensure_monochromatic_representatives(g, c);
        if (evaluate(g, reps).max_defect > before.max_defect) return false;
      }
    }
    return true;
  });

  criterion("4.4 annealing certified >= exact D; snapped rows exact", 300, [] {
    AnnealConfig cfg;
    cfg.iterations = 10'000;
    cfg.restarts = 2;
    cfg.seed = 11;
    int case_count = 0;
    for (const auto& g : oracles::small_corpus()) {
      auto exact = min_defect_2(g).value;
      for (std::uint64_t seed = 0; seed < 14; ++seed) {
        cfg.seed = seed;
        auto res = anneal(g, cfg);
        ++case_count;
        if (res.certified_defect < exact) return false;
        for (int v = 0; v < g.order(); ++v) {
          Rational sum(0);
          for (int j = 0; j < cfg.k; ++j) {
            if (res.snapped_coloring.usage(v, j) < Rational(0)) return false;
            sum += res.snapped_coloring.usage(v, j);
          }
          if (sum != Rational(1)) return false;
        }
      }
    }
    return case_count >= 200;
  });

  criterion("4.5 pruned and unpruned exact runs agree on the corpus", 300, [] {
    SolveOptions no_prune;
    no_prune.prune = false;
    for (const auto& g : oracles::small_corpus())
      if (min_defect_2(g).value != min_defect_2(g, no_prune).value) return false;
    std::mt19937_64 rng(109);
    for (int i = 0; i < 200; ++i) {
      auto g = oracles::random_graph(rng);
      if (min_defect_2(g).value != min_defect_2(g, no_prune).value) return false;
    }
    return true;
  });

  std::printf("== acceptance: heuristic regression (criterion 5) ==\n");

  criterion("5.1 pinned-seed anneal on K_3 [] K_5: <= 3 and <= 38/13 + 1/26", 300, [] {
    auto g = cartesian_product(complete(3), complete(5));
    AnnealConfig cfg;             // default budget: 10 restarts x 1e6 iterations
    cfg.seed = 21;                // pinned; certifies 741/253 ~ 2.9289
    cfg.snap_max_denominator = 26;
    auto res = anneal(g, cfg);
    if (res.certified_defect > Rational(3)) return false;  // parity fallback level
    return res.certified_defect <= Rational(38, 13) + Rational(1, 26);
  });

  criterion("5.2 C_5[2K_1] certifies exactly 2 from the construction baseline", 300, [] {
    auto fam = formula_odd_cycle_composition(5, 0);
    AnnealConfig cfg;
    cfg.iterations = 200'000;
    cfg.restarts = 4;
    cfg.seed = 3;
    auto res = seeded_anneal_with_baseline(fam.instance, cfg, *fam.construction);
    return res.certified_defect == Rational(2);
  });

  criterion("5.3 4-regular circulant C_10(1,3): pinned seed certifies < 2", 300, [] {
    auto g = circulant(10, {1, 3});
    AnnealConfig cfg;
    cfg.iterations = 400'000;
    cfg.restarts = 6;
    cfg.seed = 12;
    cfg.snap_max_denominator = 60;
    auto res = anneal(g, cfg);
    return res.certified_defect < Rational(2);
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
