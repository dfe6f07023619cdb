#include "anneal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace fracdef {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

using FloatRows = std::vector<std::vector<double>>;

double overlap(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t j = 0; j < a.size(); ++j) s += std::min(a[j], b[j]);
  return s;
}

struct RestartOutcome {
  double best = 0.0;
  FloatRows rows;
};

RestartOutcome run_restart(const Graph& g, const AnnealConfig& cfg,
                           std::uint64_t stream, const FloatRows* start) {
  const int n = g.order();
  const int k = cfg.k;
  std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(stream)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  FloatRows rows;
  if (start) {
    rows = *start;
  } else {
    rows.assign(n, std::vector<double>(k, 0.0));
    for (int v = 0; v < n; ++v) {
      double sum = 0.0;
      for (int j = 0; j < k; ++j) {
        double e = -std::log(std::max(unit(rng), 1e-300));
        rows[v][j] = e;
        sum += e;
      }
      for (int j = 0; j < k; ++j) rows[v][j] /= sum;
    }
  }

  std::vector<double> df(n, 0.0);
  for (int v = 0; v < n; ++v)
    for (int w : g.neighbors(v)) df[v] += overlap(rows[v], rows[w]);
  auto objective = [&]() { return *std::max_element(df.begin(), df.end()); };

  double cur = objective();
  RestartOutcome out{cur, rows};
  double temp = cfg.initial_temperature;

  std::vector<double> saved_row(k), saved_df;
  for (std::uint64_t it = 0; it < cfg.iterations; ++it) {
    int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int from = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    int to = k == 1 ? from
                    : static_cast<int>((from + 1 + rng() % static_cast<std::uint64_t>(k - 1)) % k);
    double amount = std::min(unit(rng) * cfg.move_scale, rows[v][from]);

    if (to != from && amount > 0.0) {
      saved_row = rows[v];
      const auto& nbrs = g.neighbors(v);
      saved_df.assign(nbrs.size() + 1, 0.0);
      saved_df[0] = df[v];
      for (size_t i = 0; i < nbrs.size(); ++i) saved_df[i + 1] = df[nbrs[i]];

      rows[v][from] -= amount;
      rows[v][to] += amount;
      double dv = 0.0;
      for (int w : nbrs) {
        double before = overlap(saved_row, rows[w]);
        double after = overlap(rows[v], rows[w]);
        df[w] += after - before;
        dv += after;
      }
      df[v] = dv;

      double next = objective();
      double delta = next - cur;
      bool accept = delta <= 0.0 || unit(rng) < std::exp(-delta / temp);
      if (accept) {
        cur = next;
        if (cur < out.best) {
          out.best = cur;
          out.rows = rows;
        }
      } else {
        rows[v] = saved_row;
        df[v] = saved_df[0];
        for (size_t i = 0; i < nbrs.size(); ++i) df[nbrs[i]] = saved_df[i + 1];
      }
    }
    temp *= cfg.cooling_rate;
  }
  return out;
}

// Snap a float row to denominators <= N and repair it onto the exact
// simplex: the deficit goes to the largest entry (ties: lowest index); any
// overshoot is trimmed from the largest entries down.
std::vector<Rational> snap_row(const std::vector<double>& row, long N) {
  std::vector<Rational> snapped;
  snapped.reserve(row.size());
  for (double x : row) snapped.push_back(snap_to_rational(std::clamp(x, 0.0, 1.0), N));

  Rational sum(0);
  for (const auto& x : snapped) sum += x;
  Rational deficit = Rational(1) - sum;
  if (!deficit.is_zero()) {
    size_t target = 0;
    for (size_t j = 1; j < snapped.size(); ++j)
      if (snapped[j] > snapped[target]) target = j;
    snapped[target] += deficit;
    while (snapped[target].sign() < 0) {
      Rational spill = snapped[target];
      snapped[target] = Rational(0);
      size_t next = target == 0 ? 1 : 0;
      for (size_t j = 0; j < snapped.size(); ++j)
        if (j != target && snapped[j] > snapped[next]) next = j;
      snapped[next] += spill;
      target = next;
    }
  }
  return snapped;
}

FractionalColoring snap_coloring(const FloatRows& rows, int k, long N) {
  std::vector<std::vector<Rational>> exact;
  exact.reserve(rows.size());
  for (const auto& row : rows) exact.push_back(snap_row(row, N));
  return FractionalColoring(k, std::move(exact));
}

FloatRows to_float(const FractionalColoring& c) {
  FloatRows rows(c.order(), std::vector<double>(c.colors()));
  for (int v = 0; v < c.order(); ++v)
    for (int j = 0; j < c.colors(); ++j) rows[v][j] = c.usage(v, j).to_double();
  return rows;
}

AnnealResult run(const Graph& g, const AnnealConfig& cfg,
                 const FractionalColoring* baseline) {
  cfg.validate();
  if (g.order() == 0) throw std::invalid_argument("anneal: empty graph");
  if (baseline) {
    if (baseline->order() != g.order())
      throw std::invalid_argument("anneal: baseline does not fit the graph");
    if (baseline->colors() != cfg.k)
      throw std::invalid_argument("anneal: baseline color count differs from config");
  }

  FloatRows baseline_rows;
  if (baseline) baseline_rows = to_float(*baseline);

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (int r = 0; r < cfg.restarts; ++r)
      outcomes[r] = run_restart(g, cfg, static_cast<std::uint64_t>(r),
                                baseline && r == 0 ? &baseline_rows : nullptr);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        while (true) {
          int r = next.fetch_add(1);
          if (r >= cfg.restarts) break;
          outcomes[r] = run_restart(g, cfg, static_cast<std::uint64_t>(r),
                                    baseline && r == 0 ? &baseline_rows : nullptr);
        }
      });
    for (auto& th : pool) th.join();
  }

  int winner = 0;
  for (int r = 1; r < cfg.restarts; ++r)
    if (outcomes[r].best < outcomes[winner].best) winner = r;

  AnnealResult result{
      outcomes[winner].best,
      snap_coloring(outcomes[winner].rows, cfg.k, cfg.snap_max_denominator),
      Rational(0),
      {}};
  result.certified_defect = evaluate(g, result.snapped_coloring).max_defect;
  result.trace.reserve(cfg.restarts);
  for (const auto& o : outcomes) result.trace.push_back(o.best);

  if (baseline) {
    Rational base_value = evaluate(g, *baseline).max_defect;
    if (base_value <= result.certified_defect) {
      result.snapped_coloring = *baseline;
      result.certified_defect = base_value;
    }
  }
  return result;
}

}  // namespace

void AnnealConfig::validate() const {
  if (k < 1) throw std::invalid_argument("anneal: k must be >= 1");
  if (restarts < 1) throw std::invalid_argument("anneal: restarts must be >= 1");
  if (!(initial_temperature > 0.0))
    throw std::invalid_argument("anneal: initial temperature must be positive");
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
    throw std::invalid_argument("anneal: cooling rate must lie in (0, 1)");
  if (!(move_scale > 0.0 && move_scale <= 1.0))
    throw std::invalid_argument("anneal: move scale must lie in (0, 1]");
  if (snap_max_denominator < 1)
    throw std::invalid_argument("anneal: snap denominator must be >= 1");
}

AnnealResult anneal(const Graph& g, const AnnealConfig& cfg) {
  return run(g, cfg, nullptr);
}

AnnealResult seeded_anneal_with_baseline(const Graph& g, const AnnealConfig& cfg,
                                         const FractionalColoring& baseline) {
  return run(g, cfg, &baseline);
}

}  // namespace fracdef
