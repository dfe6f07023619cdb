#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "lp.hpp"

namespace fracdef {

inline constexpr int kDefaultEdgeCap = 22;

/// A direction for every edge of a graph, acyclic by construction.
/// arcs[e] = (tail, head) in the same order as Graph::edges(); topo is a
/// topological order of the vertices certifying acyclicity.
struct Orientation {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> topo;

  std::vector<int> in_degrees() const;
  std::vector<int> out_degrees() const;
  /// True iff every arc runs forward in the stored topological order.
  bool certified_acyclic() const;
};

/// Kahn's algorithm; throws std::invalid_argument if the arcs contain a
/// directed cycle.
Orientation make_orientation(int n, std::vector<std::pair<int, int>> arcs);

/// Streams every acyclic orientation of g exactly once (DFS over edges with
/// incremental cycle detection). Throws CapError when g.size() > edge_cap.
/// Returns the number of orientations visited.
///
/// `prune` is an optional subtree cut: it is consulted after each edge
/// assignment with the partial in/out degree arrays and the two endpoints
/// just updated; returning true abandons every completion of the partial
/// assignment. Prune events are counted into *pruned_events when given.
/// `prefix`, when given, fixes the direction of the first prefix->size()
/// edges (0 = forward as stored, 1 = reversed); used to partition the
/// search space across workers.
std::uint64_t enumerate_acyclic_orientations(
    const Graph& g, int edge_cap,
    const std::function<void(const Orientation&)>& visit,
    const std::function<bool(const std::vector<int>& in, const std::vector<int>& out,
                             int u, int v)>& prune = nullptr,
    std::uint64_t* pruned_events = nullptr,
    const std::vector<int>* prefix = nullptr);

std::vector<Orientation> all_acyclic_orientations(const Graph& g,
                                                  int edge_cap = kDefaultEdgeCap);

/// The min-max defect LP of a fixed acyclic orientation: variables r(v) in
/// [0,1] plus the auxiliary t; r(u) <= r(v) per arc u->v; per vertex the
/// linearized defect is constrained <= t; minimize t.
LinearProgram orientation_lp(const Graph& g, const Orientation& o);

}  // namespace fracdef
