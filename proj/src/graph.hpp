#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fracdef {

/// Undirected simple graph over vertices 0..n-1. Immutable after construction,
/// so values can be shared freely across threads.
class Graph {
public:
  /// Validates: endpoints in [0, n), no self-loops, no duplicate edges.
  /// Edge pairs are normalized to u < v and stored sorted.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          std::string name = "");

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(int u, int v) const;
  const std::string& name() const { return name_; }

  /// Two-colorable check; fills side (0/1 per vertex) when bipartite.
  bool is_bipartite(std::vector<int>* side = nullptr) const;

private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::string name_;
};

// Generators. Labeling conventions (documented in the README):
//   fan(n), wheel(n): hub is the last vertex (index n).
//   cartesian_product: vertex (i, j) of G x H is flattened as i*|V(H)| + j.
//   composition_with_empty: vertex (v, t) of G[aK_1] is flattened as v*a + t.
Graph path(int n);
Graph cycle(int n);
Graph fan(int n);
Graph wheel(int n);
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph composition_with_empty(const Graph& g, int a);
Graph circulant(int n, const std::vector<int>& offsets);

/// The Hajos graph: central triangle {0,1,2}; apex 3 on {0,1}, 4 on {1,2},
/// 5 on {0,2}. 6 vertices, 9 edges, degree sequence (4,4,4,2,2,2).
Graph hajos();

/// Text format: header "n m", then m lines "u v"; '#' starts a comment line.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

}  // namespace fracdef
