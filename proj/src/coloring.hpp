#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "orientation.hpp"
#include "rational.hpp"

namespace fracdef {

/// Per-vertex probability vector over k colors: usage(v, j) is the amount of
/// color j on vertex v. Every entry is >= 0 and every row sums to exactly 1.
/// Immutable value type; transforms return new colorings.
class FractionalColoring {
public:
  /// Validates entries >= 0, row width == k, exact row sums of 1.
  FractionalColoring(int k, std::vector<std::vector<Rational>> rows);

  static FractionalColoring monochromatic(int k, const std::vector<int>& colors);
  /// k = 2 rows (r, 1-r) from red usages.
  static FractionalColoring from_red_usages(const std::vector<Rational>& reds);

  int colors() const { return k_; }
  int order() const { return static_cast<int>(usage_.size()); }
  const Rational& usage(int v, int j) const { return usage_.at(v).at(j); }
  const std::vector<Rational>& row(int v) const { return usage_.at(v); }
  const std::vector<std::vector<Rational>>& rows() const { return usage_; }

  /// Red usages r(v) = usage(v, 0); requires k == 2.
  std::vector<Rational> red_usages() const;

  bool vertex_monochromatic(int v) const;
  bool all_monochromatic() const;

  bool operator==(const FractionalColoring& o) const = default;
  /// Lexicographic over rows then entries; used for deterministic witness
  /// tie-breaking.
  bool lex_less(const FractionalColoring& o) const;

private:
  int k_;
  std::vector<std::vector<Rational>> usage_;
};

struct DefectReport {
  std::vector<Rational> per_vertex;
  Rational max_defect;
  Rational total_defect;
};

/// Shared color mass of an edge: sum_j min(usage(u,j), usage(v,j)).
Rational edge_overlap(const FractionalColoring& c, int u, int v);

/// Exact per-vertex defects: df(v) = sum over neighbors of the overlap.
DefectReport evaluate(const Graph& g, const FractionalColoring& c);

/// Orient each edge from smaller to larger red usage, ties by vertex index.
/// Requires k == 2. Always acyclic: (r(v), v) is a total order.
Orientation induced_orientation(const Graph& g, const FractionalColoring& c);

/// Repeatedly merges one non-monochromatic vertex into a single color,
/// choosing the endpoint merge with the smaller total defect (ties: lower
/// color index). Never increases the total defect.
FractionalColoring make_monochromatic_total(const Graph& g, const FractionalColoring& c);

/// Greedily recolors, for each color j, the not-yet-chosen vertex with the
/// largest usage of j (ties: lowest index) to be purely j. Never increases
/// the max defect. Requires g.order() >= k.
FractionalColoring ensure_monochromatic_representatives(const Graph& g,
                                                        const FractionalColoring& c);

/// Text format: one line per vertex with k rationals; '#' comment lines.
FractionalColoring read_coloring(std::string_view text, int k);
std::string write_coloring(const FractionalColoring& c);

}  // namespace fracdef
