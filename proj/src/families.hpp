#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace fracdef {

enum class AnswerStatus { Theorem, UpperBoundOnly };

/// A resolved family instance: the generated graph, the closed-form value,
/// and (usually) an explicit coloring certifying it. Construction is checked
/// at build time: a Theorem answer certifies exactly to `value`, an upper
/// bound certifies to at most `value`.
struct FamilyAnswer {
  std::string family;
  std::vector<long> params;
  int k = 2;
  bool total_objective = false;  // value is a TD, not a max-defect D
  Rational value;
  AnswerStatus status = AnswerStatus::Theorem;
  std::optional<FractionalColoring> construction;
  std::string citation;
  Graph instance;
};

FamilyAnswer formula_complete(long n, long k);
FamilyAnswer formula_total_complete(long n, long k);
FamilyAnswer formula_fan(long n);
FamilyAnswer formula_wheel(long n);
FamilyAnswer formula_multipartite_equal(long m, long a);
FamilyAnswer formula_tripartite(long a, long b, long c);

/// D(C_m[2K_1], 2) = 2 for odd m. Rejects even m (bipartite, trivially 0).
/// Two distinct optimal constructions exist; index 0 replicates an optimal
/// cycle coloring, index 1 colors one vertex of each pair red and one blue.
FamilyAnswer formula_odd_cycle_composition(long m, int construction = 0);

/// Best known upper bound for the rooks graph K_m [] K_n. Theorem when both
/// sides are even or (m,n) = (3,3); the (3,5), (3,7), (3,9) cases carry the
/// special matrices; odd n >= 11 with m = 3 carries the n/2 + 11/26 bound
/// with no printed construction.
FamilyAnswer rooks_bound(long m, long n);

/// Total-defect lower bound TD(K_m,2)/m + TD(K_n,2)/n for D(K_m [] K_n, 2).
Rational rooks_lower_bound(long m, long n);

/// The documented n/2 + 11/26 upper-bound constant for K_3 [] K_n, odd n >= 5.
Rational rooks_k3_extension_bound(long n);

/// The parity coloring of K_m [] K_n: red iff i and j share parity.
/// Certifies ceil(m/2) + ceil(n/2) - 2.
FractionalColoring rooks_parity_coloring(long m, long n);

/// The shipped explicit matrices for (3,5), (3,7), (3,9) in row-major rooks
/// layout (vertex (i,j) = i*n + j with i < 3).
const FractionalColoring& rooks_matrix_coloring(long m, long n);

struct ExpansionBounds {
  Rational td_lower_factor;  // TD(G[aK_1], k) >= factor * TD(G, k)
  Rational d_upper;          // D(G[aK_1], k) <= this
};
ExpansionBounds expansion_bounds(const Graph& g, long a, int k, const Rational& d_of_g);

/// Every vertex of I_v receives v's color vector.
FractionalColoring replicate_coloring(const FractionalColoring& c, long a);

/// D(K_n [] G, k) = ceil(n/k) - 1 for k-partite G, taking a user-certified
/// k-partition of G (validated: no edge inside a class).
FamilyAnswer complete_product_partition(long n, const Graph& g,
                                        const std::vector<int>& partition, int k);

}  // namespace fracdef
