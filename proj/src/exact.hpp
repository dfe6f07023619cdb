#pragma once

#include <cstdint>
#include <optional>

#include "coloring.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace fracdef {

inline constexpr std::uint64_t kDefaultColoringCap = 20'000'000;

struct SolveOptions {
  bool prune = true;
  /// Extra prune bound. Must be a valid upper bound on the optimum or the
  /// reported value may exceed it; the built-in incumbent is always backed
  /// by a real coloring and needs no such promise.
  std::optional<Rational> prune_threshold;
  int edge_cap = kDefaultEdgeCap;
  std::uint64_t coloring_cap = kDefaultColoringCap;
  bool symmetry_cut = true;  // fix vertex 0's color in brute-force searches
  int threads = 1;
};

struct SearchCounters {
  std::uint64_t orientations_enumerated = 0;
  std::uint64_t orientations_pruned = 0;
  std::uint64_t lps_solved = 0;
  std::uint64_t colorings_enumerated = 0;
};

struct ExactResult {
  Rational value;
  FractionalColoring witness;
  SearchCounters counters;
};

/// Exact D(G,2): minimum over acyclic orientations of the orientation LP
/// optimum. Prune rule: any orientation with a vertex of min(indeg, outdeg)
/// >= the incumbent cannot beat it. The witness is re-evaluated before
/// returning; its max defect equals the reported value exactly.
ExactResult min_defect_2(const Graph& g, const SolveOptions& options = {});

/// Exact TD(G,k) by exhaustive search over monochromatic colorings (a
/// monochromatic optimum always exists).
ExactResult min_total_defect(const Graph& g, int k, const SolveOptions& options = {});

/// Minimum over monochromatic colorings of the max vertex defect: the
/// ordinary defective-coloring optimum, an upper bound on D(G,k).
ExactResult min_defect_monochromatic(const Graph& g, int k,
                                     const SolveOptions& options = {});

}  // namespace fracdef
