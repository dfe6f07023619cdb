#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace fracdef {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
  std::vector<Rational> coeffs;  // length num_vars
  Relation rel = Relation::LessEq;
  Rational rhs;
};

/// Absent side means the variable is unbounded in that direction.
struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// Exact-rational linear program, objective minimized.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<VariableBounds> bounds;  // length num_vars
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational optimal_value;         // meaningful when Optimal
  std::vector<Rational> witness;  // meaningful when Optimal
};

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule. The returned witness is re-substituted into every constraint and
/// bound before returning; a violation is a logic error, not a status.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace fracdef
