#pragma once

#include <cstdint>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace fracdef {

struct AnnealConfig {
  int k = 2;
  std::uint64_t iterations = 1'000'000;
  int restarts = 10;
  double initial_temperature = 1.0;
  double cooling_rate = 0.9995;
  double move_scale = 0.25;
  std::uint64_t seed = 0;
  long snap_max_denominator = 2520;  // lcm(1..9)
  int threads = 1;

  void validate() const;
};

struct AnnealResult {
  double best_float_defect = 0.0;
  FractionalColoring snapped_coloring;
  Rational certified_defect;  // exact defect of snapped_coloring
  std::vector<double> trace;  // best float objective per restart
};

/// Simulated annealing over fractional k-colorings. The search runs on
/// floats; the winning coloring is snapped to denominators <=
/// snap_max_denominator, re-projected onto the simplex, and certified by the
/// exact evaluator. Deterministic for a fixed (graph, config): each restart
/// draws its stream from (seed, restart index), so parallel and serial runs
/// report identical results.
AnnealResult anneal(const Graph& g, const AnnealConfig& cfg);

/// Warm start: restart 0 begins from `baseline`, and the final result is
/// never worse than the certified baseline defect.
AnnealResult seeded_anneal_with_baseline(const Graph& g, const AnnealConfig& cfg,
                                         const FractionalColoring& baseline);

}  // namespace fracdef
