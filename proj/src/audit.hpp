#pragma once

#include <string>
#include <vector>

#include "anneal.hpp"
#include "exact.hpp"
#include "graph.hpp"

namespace fracdef {

/// Per-instance audit outcome. The audit reports evidence; it never asserts
/// a conjecture.
struct AuditRow {
  std::string instance;
  std::string evidence;
  std::string verdict;  // consistent | violated | inconclusive | excluded
};

struct AuditReport {
  std::string conjecture;
  std::string statement;
  std::vector<AuditRow> rows;
  int consistent = 0, violated = 0, inconclusive = 0, excluded = 0;
};

/// Conjecture ids: conj1 (outerplanar), conj2 (equal multipartite, k colors),
/// conj3a / conj3b (rooks), conj4 (connected 4-regular graphs).
/// `max_param` bounds the instance sweep (interpretation per conjecture);
/// heuristic brackets use `heuristic` when provided, otherwise a small
/// default budget.
AuditReport audit_conjecture(const std::string& id, long max_param,
                             const SolveOptions& solve = {},
                             const AnnealConfig* heuristic = nullptr);

std::string render_audit_text(const AuditReport& report);

}  // namespace fracdef
