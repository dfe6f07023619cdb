#include "exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "errors.hpp"
#include "lp.hpp"
#include "orientation.hpp"

namespace fracdef {

namespace {

// Deterministic brute-force / greedy search over monochromatic 2-colorings,
// used to seed the incumbent for min_defect_2. Isolated vertices are fixed
// to color 0; exhaustive when the active vertex count is small enough.
std::vector<int> initial_two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> active;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) active.push_back(v);

  std::vector<int> color(n, 0);
  if (active.empty()) return color;

  if (active.size() <= 20) {
    std::vector<int> best_assign, assign(active.size(), 0);
    int best_max = -1;
    std::uint64_t total = 1ull << (active.size() - 1);  // first active vertex fixed
    for (std::uint64_t code = 0; code < total; ++code) {
      for (size_t i = 1; i < active.size(); ++i)
        assign[i] = static_cast<int>((code >> (i - 1)) & 1u);
      for (size_t i = 0; i < active.size(); ++i) color[active[i]] = assign[i];
      int worst = 0;
      for (int v : active) {
        int same = 0;
        for (int w : g.neighbors(v)) same += color[w] == color[v];
        worst = std::max(worst, same);
      }
      if (best_max < 0 || worst < best_max) {
        best_max = worst;
        best_assign = assign;
      }
    }
    for (size_t i = 0; i < active.size(); ++i) color[active[i]] = best_assign[i];
    return color;
  }

  // Greedy sweep then steepest single-vertex descent on the max defect.
  for (int v : active) {
    int same0 = 0, same1 = 0;
    for (int w : g.neighbors(v)) {
      if (w > v) continue;
      (color[w] == 0 ? same0 : same1)++;
    }
    color[v] = same1 < same0 ? 1 : 0;
  }
  auto worst_of = [&]() {
    int worst = 0;
    for (int v : active) {
      int same = 0;
      for (int w : g.neighbors(v)) same += color[w] == color[v];
      worst = std::max(worst, same);
    }
    return worst;
  };
  for (int pass = 0; pass < 50; ++pass) {
    int worst = worst_of();
    bool improved = false;
    for (int v : active) {
      color[v] ^= 1;
      int candidate = worst_of();
      if (candidate < worst) {
        worst = candidate;
        improved = true;
      } else {
        color[v] ^= 1;
      }
    }
    if (!improved) break;
  }
  return color;
}

struct Incumbent {
  Rational value;
  FractionalColoring coloring;

  // Strictly smaller value wins; equal value falls back to the
  // lexicographically least coloring so reported witnesses are reproducible.
  bool offer(const Rational& v, const FractionalColoring& c) {
    if (v < value || (v == value && c.lex_less(coloring))) {
      value = v;
      coloring = c;
      return true;
    }
    return false;
  }
};

FractionalColoring coloring_from_lp_witness(int n, const std::vector<Rational>& witness) {
  std::vector<Rational> reds(witness.begin(), witness.begin() + n);
  return FractionalColoring::from_red_usages(reds);
}

void certify(const Graph& g, const ExactResult& result, bool total) {
  auto report = evaluate(g, result.witness);
  const Rational& achieved = total ? report.total_defect : report.max_defect;
  if (achieved != result.value)
    throw std::logic_error("exact: witness certifies " + achieved.str() +
                           " but the reported value is " + result.value.str());
}

}  // namespace

ExactResult min_defect_2(const Graph& g, const SolveOptions& options) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("min_defect_2: empty graph");
  if (g.size() > options.edge_cap)
    throw CapError(static_cast<std::uint64_t>(options.edge_cap),
                   "instance too large: " + std::to_string(g.size()) +
                       " edges exceeds the cap of " + std::to_string(options.edge_cap));

  SearchCounters counters;

  // Incumbent: best monochromatic coloring, or a proper 2-coloring when the
  // graph is bipartite (which settles the optimum outright under pruning).
  std::vector<int> side;
  std::vector<int> mono = initial_two_coloring(g);
  auto seed_coloring = FractionalColoring::monochromatic(2, mono);
  Incumbent best{evaluate(g, seed_coloring).max_defect, seed_coloring};
  if (g.is_bipartite(&side)) {
    auto proper = FractionalColoring::monochromatic(2, side);
    best.offer(evaluate(g, proper).max_defect, proper);
  }

  std::mutex lock;
  Rational shared_bound = best.value;
  if (options.prune_threshold)
    shared_bound = min(shared_bound, *options.prune_threshold);

  auto solve_stream = [&](const std::vector<int>* prefix, Incumbent& local,
                          SearchCounters& cnt) {
    Rational bound;
    {
      std::lock_guard guard(lock);
      bound = shared_bound;
    }
    auto prune = [&](const std::vector<int>& in, const std::vector<int>& out,
                     int u, int v) {
      if (!options.prune) return false;
      int a = std::min(in[u], out[u]), b = std::min(in[v], out[v]);
      return Rational(std::max(a, b)) >= bound;
    };
    auto visit = [&](const Orientation& o) {
      ++cnt.orientations_enumerated;
      if (options.prune) {
        auto in = o.in_degrees(), out = o.out_degrees();
        int phi = 0;
        for (int v = 0; v < o.n; ++v) phi = std::max(phi, std::min(in[v], out[v]));
        if (Rational(phi) >= bound) {
          ++cnt.orientations_pruned;
          return;
        }
      }
      auto lp = orientation_lp(g, o);
      auto res = solve_lp(lp);
      ++cnt.lps_solved;
      if (res.status != LpStatus::Optimal)
        throw std::logic_error("min_defect_2: orientation LP not optimal");
      auto witness = coloring_from_lp_witness(g.order(), res.witness);
      if (local.offer(res.optimal_value, witness)) {
        std::lock_guard guard(lock);
        if (local.value < shared_bound) shared_bound = local.value;
        bound = min(bound, shared_bound);
      } else {
        // refresh the bound now and then so other workers' progress helps
        if ((cnt.orientations_enumerated & 0x3f) == 0) {
          std::lock_guard guard(lock);
          bound = min(bound, shared_bound);
        }
      }
    };
    enumerate_acyclic_orientations(g, options.edge_cap, visit, prune,
                                   &cnt.orientations_pruned, prefix);
  };

  int threads = std::max(1, options.threads);
  if (threads == 1 || g.size() < 4) {
    solve_stream(nullptr, best, counters);
  } else {
    int depth = std::min(g.size(),
                         static_cast<int>(std::bit_width(static_cast<unsigned>(threads))) + 2);
    std::vector<std::vector<int>> prefixes;
    for (int code = 0; code < (1 << depth); ++code) {
      std::vector<int> p(depth);
      for (int i = 0; i < depth; ++i) p[i] = (code >> i) & 1;
      prefixes.push_back(std::move(p));
    }
    std::vector<Incumbent> locals(threads, best);
    std::vector<SearchCounters> parts(threads);
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          while (true) {
            size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            solve_stream(&prefixes[i], locals[t], parts[t]);
          }
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
    for (int t = 0; t < threads; ++t) {
      best.offer(locals[t].value, locals[t].coloring);
      counters.orientations_enumerated += parts[t].orientations_enumerated;
      counters.orientations_pruned += parts[t].orientations_pruned;
      counters.lps_solved += parts[t].lps_solved;
    }
  }

  ExactResult result{best.value, best.coloring, counters};
  certify(g, result, /*total=*/false);
  return result;
}

namespace {

// Shared scaffolding for the monochromatic brute-force searches: enumerates
// every assignment (vertex 0 fixed to color 0 under the symmetry cut) and
// keeps the first assignment minimizing `score`.
ExactResult monochromatic_search(const Graph& g, int k, const SolveOptions& options,
                                 bool total_objective) {
  if (k < 1) throw std::invalid_argument("exact: k must be >= 1");
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("exact: empty graph");

  // k^n against the work cap, computed without overflow.
  std::uint64_t work = 1;
  for (int i = 0; i < n; ++i) {
    if (work > options.coloring_cap / static_cast<std::uint64_t>(k))
      throw CapError(options.coloring_cap,
                     "instance too large: " + std::to_string(k) + "^" +
                         std::to_string(n) + " colorings exceeds the cap of " +
                         std::to_string(options.coloring_cap));
    work *= static_cast<std::uint64_t>(k);
  }

  SearchCounters counters;
  std::vector<int> color(n, 0), best_color;
  long best_score = -1;

  const int first_free = options.symmetry_cut ? 1 : 0;
  while (true) {
    ++counters.colorings_enumerated;
    long score = 0;
    if (total_objective) {
      for (auto [u, v] : g.edges()) score += 2 * (color[u] == color[v]);
    } else {
      for (int v = 0; v < n; ++v) {
        int same = 0;
        for (int w : g.neighbors(v)) same += color[w] == color[v];
        score = std::max(score, static_cast<long>(same));
      }
    }
    if (best_score < 0 || score < best_score) {
      best_score = score;
      best_color = color;
    }

    int i = n - 1;
    while (i >= first_free && color[i] == k - 1) color[i--] = 0;
    if (i < first_free) break;
    ++color[i];
  }

  ExactResult result{Rational(best_score),
                     FractionalColoring::monochromatic(k, best_color), counters};
  certify(g, result, total_objective);
  return result;
}

}  // namespace

ExactResult min_total_defect(const Graph& g, int k, const SolveOptions& options) {
  return monochromatic_search(g, k, options, /*total_objective=*/true);
}

ExactResult min_defect_monochromatic(const Graph& g, int k, const SolveOptions& options) {
  return monochromatic_search(g, k, options, /*total_objective=*/false);
}

}  // namespace fracdef
