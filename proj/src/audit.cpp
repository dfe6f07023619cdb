#include "audit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "families.hpp"

namespace fracdef {

namespace {

void add(AuditReport& report, std::string instance, std::string evidence,
         std::string verdict) {
  if (verdict == "consistent") ++report.consistent;
  else if (verdict == "violated") ++report.violated;
  else if (verdict == "excluded") ++report.excluded;
  else ++report.inconclusive;
  report.rows.push_back({std::move(instance), std::move(evidence), std::move(verdict)});
}

AnnealConfig audit_budget(const AnnealConfig* heuristic) {
  if (heuristic) return *heuristic;
  AnnealConfig cfg;
  cfg.iterations = 200'000;
  cfg.restarts = 4;
  cfg.seed = 1;
  cfg.snap_max_denominator = 40;  // keeps certificates in the table readable
  return cfg;
}

bool within_caps(const Graph& g, const SolveOptions& solve) {
  return g.size() <= solve.edge_cap;
}

// Outerplanar corpus within solver caps: fans, paths, cycles, and a few
// hand-tagged maximal outerplanar graphs (fan stackings).
std::vector<Graph> outerplanar_corpus(long max_param) {
  std::vector<Graph> out;
  for (long n = 3; n <= max_param; ++n) out.push_back(fan(static_cast<int>(n)));
  for (long n = 3; n <= max_param + 2; ++n) out.push_back(cycle(static_cast<int>(n)));
  out.push_back(path(6));
  // Triangulated hexagon and a fan-of-fans; both outerplanar by construction.
  out.push_back(Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}, {3, 5}},
      "hexagon-triangulated"));
  out.push_back(Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 2}, {2, 4}, {4, 6}},
      "zigzag-chain"));
  return out;
}

void audit_conj1(AuditReport& report, long max_param, const SolveOptions& solve) {
  report.statement = "every outerplanar graph has a 2-coloring with defect < 2";
  for (const auto& g : outerplanar_corpus(std::min(max_param, 8l))) {
    if (!within_caps(g, solve)) {
      add(report, g.name(), "exceeds exact caps", "inconclusive");
      continue;
    }
    auto exact = min_defect_2(g, solve);
    bool ok = exact.value < Rational(2);
    add(report, g.name(), "exact D = " + exact.value.str(),
        ok ? "consistent" : "violated");
  }
  // Larger fans via the proven formula.
  for (long n = 9; n <= std::max(max_param, 30l); n += 7) {
    auto fam = formula_fan(n);
    bool ok = fam.value < Rational(2);
    add(report, "F" + std::to_string(n), "theorem D = " + fam.value.str(),
        ok ? "consistent" : "violated");
  }
}

void audit_conj2(AuditReport& report, long max_param, const SolveOptions& solve,
                 const AnnealConfig* heuristic) {
  report.statement =
      "equal complete multipartite: D(K_{m x a}, k) = (ceil(m/k) - 1) a";
  for (long m = 2; m <= max_param; ++m)
    for (long a = 1; a <= 3; ++a)
      for (long k = 2; k <= 4; ++k) {
        if (static_cast<long>(m * a) > 12) continue;
        std::string name = "K_{" + std::to_string(m) + "x" + std::to_string(a) +
                           "}, k=" + std::to_string(k);
        Rational conj((m + k - 1) / k * a - a);  // (ceil(m/k) - 1) a
        Graph g = complete_multipartite(std::vector<int>(m, static_cast<int>(a)));

        if (k == 2) {
          // Proven for two colors; cross-check against the solver when small.
          if (within_caps(g, solve)) {
            auto exact = min_defect_2(g, solve);
            add(report, name, "exact D = " + exact.value.str(),
                exact.value == conj ? "consistent" : "violated");
          } else {
            add(report, name, "theorem (two colors)", "consistent");
          }
          continue;
        }
        // k >= 3: the equitable monochromatic upper bound always matches the
        // conjecture; search for a certificate below it.
        AnnealConfig cfg = audit_budget(heuristic);
        cfg.k = static_cast<int>(k);
        auto heur = anneal(g, cfg);
        if (heur.certified_defect < conj) {
          add(report, name, "certified coloring at " + heur.certified_defect.str() +
                                " < " + conj.str(), "violated");
        } else {
          add(report, name,
              "search stayed at " + heur.certified_defect.str() + " >= " + conj.str(),
              "consistent");
        }
      }
}

void audit_conj3a(AuditReport& report, long max_param, const SolveOptions& solve) {
  report.statement = "rooks with m+n odd: D(K_m [] K_n, 2) = (m+n-3)/2";
  for (long m = 2; m <= max_param; ++m)
    for (long n = m + 1; n <= max_param; ++n) {
      if ((m + n) % 2 == 0) continue;
      std::string name = "K" + std::to_string(m) + "[]K" + std::to_string(n);
      Rational conj(m + n - 3, 2);
      Graph g = cartesian_product(complete(static_cast<int>(m)),
                                  complete(static_cast<int>(n)));
      if (within_caps(g, solve)) {
        auto exact = min_defect_2(g, solve);
        add(report, name, "exact D = " + exact.value.str(),
            exact.value == conj ? "consistent" : "violated");
        continue;
      }
      Rational lo = rooks_lower_bound(m, n);
      Rational hi = rooks_bound(m, n).value;
      if (conj < lo || conj > hi) {
        add(report, name,
            "conjectured " + conj.str() + " outside bracket [" + lo.str() + ", " +
                hi.str() + "]", "violated");
      } else {
        add(report, name,
            "bracket [" + lo.str() + ", " + hi.str() + "] contains " + conj.str(),
            "consistent");
      }
    }
}

void audit_conj3b(AuditReport& report, long max_param, const SolveOptions& solve,
                  const AnnealConfig* heuristic) {
  report.statement =
      "rooks with mn odd, mn > 9: D(K_m [] K_n, 2) < ceil(m/2) + ceil(n/2) - 2";
  for (long m = 3; m <= max_param; m += 2)
    for (long n = m; n <= max_param; n += 2) {
      if (m * n <= 9) continue;
      std::string name = "K" + std::to_string(m) + "[]K" + std::to_string(n);
      Rational parity(static_cast<long>((m + 1) / 2 + (n + 1) / 2 - 2));
      auto bound = rooks_bound(m, n);
      if (bound.construction && bound.value < parity) {
        add(report, name,
            "certified construction at " + bound.value.str() + " < " + parity.str(),
            "consistent");
        continue;
      }
      Graph g = cartesian_product(complete(static_cast<int>(m)),
                                  complete(static_cast<int>(n)));
      if (within_caps(g, solve)) {
        auto exact = min_defect_2(g, solve);
        add(report, name, "exact D = " + exact.value.str(),
            exact.value < parity ? "consistent" : "violated");
        continue;
      }
      AnnealConfig cfg = audit_budget(heuristic);
      auto heur = anneal(g, cfg);
      if (heur.certified_defect < parity) {
        add(report, name,
            "certified coloring at " + heur.certified_defect.str() + " < " + parity.str(),
            "consistent");
      } else {
        add(report, name,
            "no certificate below " + parity.str() + " found (best " +
                heur.certified_defect.str() + ")", "inconclusive");
      }
    }
}

// A connected 4-regular graph is C_m[2K_1] exactly when its vertices pair up
// into non-adjacent twins with identical neighborhoods (the quotient is then
// a connected 2-regular graph, i.e. a cycle of length n/2).
bool is_odd_cycle_blowup(const Graph& g) {
  const int n = g.order();
  if (n % 4 != 2) return false;  // need n = 2m with m odd
  std::vector<int> twin(n, -1);
  for (int u = 0; u < n; ++u) {
    if (twin[u] != -1) continue;
    for (int v = u + 1; v < n; ++v) {
      if (twin[v] != -1 || g.adjacent(u, v)) continue;
      if (g.neighbors(u) == g.neighbors(v)) {
        twin[u] = v;
        twin[v] = u;
        break;
      }
    }
    if (twin[u] == -1) return false;
  }
  return true;
}

void audit_conj4(AuditReport& report, long max_param, const SolveOptions& solve) {
  report.statement =
      "connected 4-regular graphs other than odd C_m[2K_1]: D(G,2) < 2 for all "
      "but finitely many";
  long cap_n = std::min(max_param, 11l);
  for (long n = 5; n <= cap_n; ++n)
    for (long d1 = 1; d1 <= n / 2; ++d1)
      for (long d2 = d1 + 1; d2 <= n / 2; ++d2) {
        if (2 * d2 == n) continue;  // offset n/2 contributes degree 1, not 2
        if (std::gcd(std::gcd(d1, d2), n) != 1) continue;  // disconnected
        Graph g = circulant(static_cast<int>(n),
                            {static_cast<int>(d1), static_cast<int>(d2)});
        if (g.degree(0) != 4) continue;
        std::string name = g.name();
        if (is_odd_cycle_blowup(g)) {
          add(report, name, "odd cycle blow-up, excluded by the statement", "excluded");
          continue;
        }
        if (!within_caps(g, solve)) {
          add(report, name, "exceeds exact caps", "inconclusive");
          continue;
        }
        auto exact = min_defect_2(g, solve);
        if (exact.value < Rational(2)) {
          add(report, name, "exact D = " + exact.value.str(), "consistent");
        } else if (n == 5) {
          add(report, name, "exact D = " + exact.value.str() + " (known exception K_5)",
              "excluded");
        } else {
          add(report, name, "exact D = " + exact.value.str(), "violated");
        }
      }
}

}  // namespace

AuditReport audit_conjecture(const std::string& id, long max_param,
                             const SolveOptions& solve, const AnnealConfig* heuristic) {
  AuditReport report;
  report.conjecture = id;
  if (max_param < 3) max_param = 3;
  if (id == "conj1") audit_conj1(report, max_param, solve);
  else if (id == "conj2") audit_conj2(report, max_param, solve, heuristic);
  else if (id == "conj3a") audit_conj3a(report, max_param, solve);
  else if (id == "conj3b") audit_conj3b(report, max_param, solve, heuristic);
  else if (id == "conj4") audit_conj4(report, max_param, solve);
  else throw std::invalid_argument("audit: unknown conjecture '" + id +
                                   "' (expected conj1, conj2, conj3a, conj3b, conj4)");
  return report;
}

std::string render_audit_text(const AuditReport& report) {
  std::string out = "conjecture: " + report.conjecture + "  (" + report.statement + ")\n";
  size_t w1 = 8, w2 = 8;
  for (const auto& r : report.rows) {
    w1 = std::max(w1, r.instance.size());
    w2 = std::max(w2, r.evidence.size());
  }
  for (const auto& r : report.rows) {
    out += r.instance + std::string(w1 - r.instance.size() + 2, ' ') + r.evidence +
           std::string(w2 - r.evidence.size() + 2, ' ') + r.verdict + "\n";
  }
  out += "summary: " + std::to_string(report.consistent) + " consistent, " +
         std::to_string(report.violated) + " violated, " +
         std::to_string(report.inconclusive) + " inconclusive, " +
         std::to_string(report.excluded) +
         " excluded; evidence only, no conjecture is asserted\n";
  return out;
}

}  // namespace fracdef
