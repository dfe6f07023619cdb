#include "lp.hpp"

#include <stdexcept>
#include <string>

namespace fracdef {

namespace {

void validate(const LinearProgram& lp) {
  if (lp.num_vars < 1) throw std::invalid_argument("lp: needs at least one variable");
  size_t nv = static_cast<size_t>(lp.num_vars);
  if (lp.objective.size() != nv)
    throw std::invalid_argument("lp: objective length mismatch");
  if (lp.bounds.size() != nv)
    throw std::invalid_argument("lp: bounds length mismatch");
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != nv)
      throw std::invalid_argument("lp: constraint length mismatch");
  for (const auto& b : lp.bounds)
    if (b.lower && b.upper && *b.lower > *b.upper)
      throw std::invalid_argument("lp: bound lower > upper");
}

// How an original variable maps onto the nonnegative standard-form variables.
struct VarMap {
  enum Kind { Shifted, Flipped, Free } kind = Shifted;
  int col = 0;        // y index (and y+ for Free)
  int col_neg = -1;   // y- for Free
  Rational offset;    // x = offset + y (Shifted), x = offset - y (Flipped)
};

struct Tableau {
  // rows x (cols + 1); last column is the rhs
  std::vector<std::vector<Rational>> a;
  std::vector<int> basis;  // column that is basic in each row
  int cols = 0;

  Rational& rhs(int i) { return a[i][cols]; }

  void pivot(int row, int col) {
    Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    basis[row] = col;
  }
};

// Bland's rule: entering = smallest column index with negative reduced cost,
// leaving = smallest basic column among minimal-ratio rows. Returns false on
// an unbounded ray.
bool run_simplex(Tableau& t, const std::vector<Rational>& cost) {
  const int m = static_cast<int>(t.a.size());
  while (true) {
    int enter = -1;
    for (int j = 0; j < t.cols && enter < 0; ++j) {
      Rational rc = cost[j];
      for (int i = 0; i < m; ++i) {
        if (cost[t.basis[i]].is_zero() || t.a[i][j].is_zero()) continue;
        rc -= cost[t.basis[i]] * t.a[i][j];
      }
      if (rc.sign() < 0) enter = j;
    }
    if (enter < 0) return true;

    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t.a[i][enter].sign() <= 0) continue;
      Rational ratio = t.rhs(i) / t.a[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    t.pivot(leave, enter);
  }
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  validate(lp);
  const int nv = lp.num_vars;

  // Substitute bounds away so every standard-form variable is >= 0.
  std::vector<VarMap> map(nv);
  int ny = 0;
  std::vector<Constraint> rows;  // extra rows for two-sided bounds
  for (int i = 0; i < nv; ++i) {
    const auto& b = lp.bounds[i];
    if (b.lower) {
      map[i] = {VarMap::Shifted, ny++, -1, *b.lower};
      if (b.upper) {
        Constraint c;
        c.coeffs.assign(nv, Rational(0));
        c.coeffs[i] = Rational(1);
        c.rel = Relation::LessEq;
        c.rhs = *b.upper;
        rows.push_back(std::move(c));  // re-expressed below like any row
      }
    } else if (b.upper) {
      map[i] = {VarMap::Flipped, ny++, -1, *b.upper};
    } else {
      map[i] = {VarMap::Free, ny, ny + 1, Rational(0)};
      ny += 2;
    }
  }

  std::vector<Constraint> all = lp.constraints;
  all.insert(all.end(), rows.begin(), rows.end());
  const int m = static_cast<int>(all.size());

  // Rewrite each constraint over the y variables.
  struct StdRow {
    std::vector<Rational> coeffs;
    Relation rel;
    Rational rhs;
  };
  std::vector<StdRow> srows(m);
  for (int r = 0; r < m; ++r) {
    srows[r].coeffs.assign(ny, Rational(0));
    srows[r].rel = all[r].rel;
    srows[r].rhs = all[r].rhs;
    for (int i = 0; i < nv; ++i) {
      const Rational& a = all[r].coeffs[i];
      if (a.is_zero()) continue;
      switch (map[i].kind) {
        case VarMap::Shifted:
          srows[r].coeffs[map[i].col] += a;
          srows[r].rhs -= a * map[i].offset;
          break;
        case VarMap::Flipped:
          srows[r].coeffs[map[i].col] -= a;
          srows[r].rhs -= a * map[i].offset;
          break;
        case VarMap::Free:
          srows[r].coeffs[map[i].col] += a;
          srows[r].coeffs[map[i].col_neg] -= a;
          break;
      }
    }
    if (srows[r].rhs.sign() < 0) {
      for (auto& c : srows[r].coeffs) c = -c;
      srows[r].rhs = -srows[r].rhs;
      if (srows[r].rel == Relation::LessEq) srows[r].rel = Relation::GreaterEq;
      else if (srows[r].rel == Relation::GreaterEq) srows[r].rel = Relation::LessEq;
    }
  }

  // Column layout: y's, then one slack/surplus per inequality, then artificials.
  int n_slack = 0;
  for (const auto& r : srows)
    if (r.rel != Relation::Equal) ++n_slack;
  int n_art = 0;
  for (const auto& r : srows)
    if (r.rel != Relation::LessEq) ++n_art;

  Tableau t;
  t.cols = ny + n_slack + n_art;
  t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(m, -1);

  int slack_at = ny, art_at = ny + n_slack;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < ny; ++j) t.a[r][j] = srows[r].coeffs[j];
    t.a[r][t.cols] = srows[r].rhs;
    if (srows[r].rel == Relation::LessEq) {
      t.a[r][slack_at] = Rational(1);
      t.basis[r] = slack_at++;
    } else if (srows[r].rel == Relation::GreaterEq) {
      t.a[r][slack_at++] = Rational(-1);
      t.a[r][art_at] = Rational(1);
      t.basis[r] = art_at++;
    } else {
      t.a[r][art_at] = Rational(1);
      t.basis[r] = art_at++;
    }
  }

  const int first_art = ny + n_slack;

  if (n_art > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (int j = first_art; j < t.cols; ++j) phase1[j] = Rational(1);
    if (!run_simplex(t, phase1))
      throw std::logic_error("lp: phase 1 unbounded");
    Rational infeas(0);
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= first_art) infeas += t.rhs(i);
    if (!infeas.is_zero()) return {LpStatus::Infeasible, Rational(0), {}};

    // Pivot zero-valued artificials out of the basis; drop redundant rows,
    // then erase the artificial columns entirely.
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] < first_art) continue;
      int col = -1;
      for (int j = 0; j < first_art && col < 0; ++j)
        if (!t.a[i][j].is_zero()) col = j;
      if (col >= 0) t.pivot(i, col);
    }
    std::vector<std::vector<Rational>> kept;
    std::vector<int> kept_basis;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= first_art) continue;  // all-zero redundant row
      auto row = std::move(t.a[i]);
      row[first_art] = row[t.cols];  // move rhs left
      row.resize(first_art + 1);
      kept.push_back(std::move(row));
      kept_basis.push_back(t.basis[i]);
    }
    t.a = std::move(kept);
    t.basis = std::move(kept_basis);
    t.cols = first_art;
  }

  // Phase 2 objective over y's (zero on slacks).
  std::vector<Rational> phase2(t.cols, Rational(0));
  for (int i = 0; i < nv; ++i) {
    const Rational& c = lp.objective[i];
    if (c.is_zero()) continue;
    switch (map[i].kind) {
      case VarMap::Shifted: phase2[map[i].col] += c; break;
      case VarMap::Flipped: phase2[map[i].col] -= c; break;
      case VarMap::Free:
        phase2[map[i].col] += c;
        phase2[map[i].col_neg] -= c;
        break;
    }
  }
  if (!run_simplex(t, phase2)) return {LpStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> y(t.cols, Rational(0));
  for (size_t i = 0; i < t.a.size(); ++i) y[t.basis[i]] = t.a[i][t.cols];

  std::vector<Rational> x(nv);
  for (int i = 0; i < nv; ++i) {
    switch (map[i].kind) {
      case VarMap::Shifted: x[i] = map[i].offset + y[map[i].col]; break;
      case VarMap::Flipped: x[i] = map[i].offset - y[map[i].col]; break;
      case VarMap::Free: x[i] = y[map[i].col] - y[map[i].col_neg]; break;
    }
  }

  Rational value(0);
  for (int i = 0; i < nv; ++i) value += lp.objective[i] * x[i];

  // Exact substitution check of the witness.
  for (const auto& c : lp.constraints) {
    Rational lhs(0);
    for (int i = 0; i < nv; ++i) lhs += c.coeffs[i] * x[i];
    bool ok = c.rel == Relation::LessEq    ? lhs <= c.rhs
              : c.rel == Relation::GreaterEq ? lhs >= c.rhs
                                             : lhs == c.rhs;
    if (!ok) throw std::logic_error("lp: witness violates a constraint");
  }
  for (int i = 0; i < nv; ++i) {
    if (lp.bounds[i].lower && x[i] < *lp.bounds[i].lower)
      throw std::logic_error("lp: witness violates a lower bound");
    if (lp.bounds[i].upper && x[i] > *lp.bounds[i].upper)
      throw std::logic_error("lp: witness violates an upper bound");
  }

  return {LpStatus::Optimal, std::move(value), std::move(x)};
}

}  // namespace fracdef
