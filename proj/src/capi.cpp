#include "fracdef/fracdef.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "anneal.hpp"
#include "audit.hpp"
#include "coloring.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "rational.hpp"

using namespace fracdef;

struct fd_graph { Graph g; };
struct fd_coloring { FractionalColoring c; };
struct fd_defect_report { DefectReport r; };
struct fd_solve_options { SolveOptions o; };
struct fd_exact_result { ExactResult r; };
struct fd_anneal_options { AnnealConfig cfg; };
struct fd_anneal_result { AnnealResult r; };
struct fd_family_answer { FamilyAnswer a; };

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating C++ errors into status codes + fd_last_error().
template <typename Fn>
fd_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FD_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return FD_ERR_PARSE;
  } catch (const CapError& e) {
    g_last_error = e.what();
    return FD_ERR_TOO_LARGE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FD_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FD_ERR_INTERNAL;
  }
}

std::vector<std::string> tokens_of(const char* text) {
  std::istringstream in(text ? text : "");
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

long to_long(const std::string& tok) {
  size_t used = 0;
  long v = std::stol(tok, &used);
  if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
  return v;
}

Graph graph_from_spec(const std::string& spec) {
  auto toks = tokens_of(spec.c_str());
  if (toks.empty()) throw std::invalid_argument("empty graph spec");
  const std::string& kind = toks[0];
  auto arg = [&](size_t i) -> long {
    if (i >= toks.size())
      throw std::invalid_argument("graph spec '" + kind + "' is missing parameters");
    return to_long(toks[i]);
  };
  auto want = [&](size_t n) {
    if (toks.size() != n + 1)
      throw std::invalid_argument("graph spec '" + kind + "' takes " +
                                  std::to_string(n) + " parameter(s)");
  };

  if (kind == "hajos") { want(0); return hajos(); }
  if (kind == "path") { want(1); return path(static_cast<int>(arg(1))); }
  if (kind == "cycle") { want(1); return cycle(static_cast<int>(arg(1))); }
  if (kind == "fan") { want(1); return fan(static_cast<int>(arg(1))); }
  if (kind == "wheel") { want(1); return wheel(static_cast<int>(arg(1))); }
  if (kind == "complete") { want(1); return complete(static_cast<int>(arg(1))); }
  if (kind == "rooks") {
    want(2);
    return cartesian_product(complete(static_cast<int>(arg(1))),
                             complete(static_cast<int>(arg(2))));
  }
  if (kind == "cyclecomp") {
    if (toks.size() == 2)
      return composition_with_empty(cycle(static_cast<int>(arg(1))), 2);
    want(2);
    return composition_with_empty(cycle(static_cast<int>(arg(1))),
                                  static_cast<int>(arg(2)));
  }
  if (kind == "multipartite" || kind == "tripartite") {
    if (toks.size() < 2)
      throw std::invalid_argument("graph spec '" + kind + "' needs part sizes");
    std::vector<int> sizes;
    for (size_t i = 1; i < toks.size(); ++i)
      sizes.push_back(static_cast<int>(to_long(toks[i])));
    return complete_multipartite(sizes);
  }
  if (kind == "circulant") {
    if (toks.size() < 3)
      throw std::invalid_argument("graph spec 'circulant' needs n plus offsets");
    std::vector<int> offsets;
    for (size_t i = 2; i < toks.size(); ++i)
      offsets.push_back(static_cast<int>(to_long(toks[i])));
    return circulant(static_cast<int>(arg(1)), offsets);
  }
  throw std::invalid_argument("unknown graph family '" + kind + "'");
}

FamilyAnswer family_from_query(const std::string& query) {
  auto toks = tokens_of(query.c_str());
  if (toks.empty()) throw std::invalid_argument("empty family query");
  const std::string& kind = toks[0];
  auto arg = [&](size_t i) -> long {
    if (i >= toks.size())
      throw std::invalid_argument("family '" + kind + "' is missing parameters");
    return to_long(toks[i]);
  };

  if (kind == "complete") return formula_complete(arg(1), arg(2));
  if (kind == "total-complete") return formula_total_complete(arg(1), arg(2));
  if (kind == "fan") return formula_fan(arg(1));
  if (kind == "wheel") return formula_wheel(arg(1));
  if (kind == "multipartite") return formula_multipartite_equal(arg(1), arg(2));
  if (kind == "tripartite") return formula_tripartite(arg(1), arg(2), arg(3));
  if (kind == "cyclecomp")
    return formula_odd_cycle_composition(arg(1),
                                         toks.size() > 2 ? static_cast<int>(arg(2)) : 0);
  if (kind == "rooks") return rooks_bound(arg(1), arg(2));
  throw std::invalid_argument("unknown family '" + kind + "'");
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "1.0.0"; }

const char* fd_last_error(void) { return g_last_error.c_str(); }

void fd_string_free(char* s) { std::free(s); }

/* ---- graphs ---- */

fd_status fd_graph_parse(const char* text, fd_graph** out) {
  if (!text || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_graph{read_graph(text)}; });
}

fd_status fd_graph_from_spec(const char* spec, fd_graph** out) {
  if (!spec || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_graph{graph_from_spec(spec)}; });
}

fd_status fd_graph_format(const fd_graph* g, char** out_text) {
  if (!g || !out_text) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out_text = dup_string(write_graph(g->g)); });
}

fd_status fd_graph_name(const fd_graph* g, char** out_name) {
  if (!g || !out_name) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out_name = dup_string(g->g.name()); });
}

int fd_graph_order(const fd_graph* g) { return g ? g->g.order() : -1; }
int fd_graph_size(const fd_graph* g) { return g ? g->g.size() : -1; }
void fd_graph_free(fd_graph* g) { delete g; }

/* ---- colorings ---- */

fd_status fd_coloring_parse(const char* text, int k, fd_coloring** out) {
  if (!text || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_coloring{read_coloring(text, k)}; });
}

fd_status fd_coloring_format(const fd_coloring* c, char** out_text) {
  if (!c || !out_text) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out_text = dup_string(write_coloring(c->c)); });
}

int fd_coloring_colors(const fd_coloring* c) { return c ? c->c.colors() : -1; }
int fd_coloring_order(const fd_coloring* c) { return c ? c->c.order() : -1; }
void fd_coloring_free(fd_coloring* c) { delete c; }

/* ---- defect evaluation ---- */

fd_status fd_evaluate(const fd_graph* g, const fd_coloring* c, fd_defect_report** out) {
  if (!g || !c || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_defect_report{evaluate(g->g, c->c)}; });
}

fd_status fd_defect_report_max(const fd_defect_report* r, char** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(r->r.max_defect.str()); });
}

fd_status fd_defect_report_total(const fd_defect_report* r, char** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(r->r.total_defect.str()); });
}

fd_status fd_defect_report_vertex(const fd_defect_report* r, int v, char** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(r->r.per_vertex.at(v).str()); });
}

void fd_defect_report_free(fd_defect_report* r) { delete r; }

fd_status fd_make_monochromatic_total(const fd_graph* g, const fd_coloring* c,
                                      fd_coloring** out) {
  if (!g || !c || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_coloring{make_monochromatic_total(g->g, c->c)}; });
}

fd_status fd_ensure_monochromatic_representatives(const fd_graph* g, const fd_coloring* c,
                                                  fd_coloring** out) {
  if (!g || !c || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded(
      [&] { *out = new fd_coloring{ensure_monochromatic_representatives(g->g, c->c)}; });
}

/* ---- exact solvers ---- */

fd_solve_options* fd_solve_options_new(void) { return new fd_solve_options{}; }
void fd_solve_options_set_prune(fd_solve_options* o, int enabled) {
  if (o) o->o.prune = enabled != 0;
}
fd_status fd_solve_options_set_prune_threshold(fd_solve_options* o, const char* rational) {
  if (!o || !rational) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { o->o.prune_threshold = Rational::parse(rational); });
}
void fd_solve_options_set_edge_cap(fd_solve_options* o, int cap) {
  if (o) o->o.edge_cap = cap;
}
void fd_solve_options_set_coloring_cap(fd_solve_options* o, unsigned long long cap) {
  if (o) o->o.coloring_cap = cap;
}
void fd_solve_options_set_symmetry_cut(fd_solve_options* o, int enabled) {
  if (o) o->o.symmetry_cut = enabled != 0;
}
void fd_solve_options_set_threads(fd_solve_options* o, int threads) {
  if (o) o->o.threads = threads;
}
void fd_solve_options_free(fd_solve_options* o) { delete o; }

fd_status fd_min_defect_2(const fd_graph* g, const fd_solve_options* o,
                          fd_exact_result** out) {
  if (!g || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] {
    *out = new fd_exact_result{min_defect_2(g->g, o ? o->o : SolveOptions{})};
  });
}

fd_status fd_min_total_defect(const fd_graph* g, int k, const fd_solve_options* o,
                              fd_exact_result** out) {
  if (!g || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] {
    *out = new fd_exact_result{min_total_defect(g->g, k, o ? o->o : SolveOptions{})};
  });
}

fd_status fd_min_defect_monochromatic(const fd_graph* g, int k, const fd_solve_options* o,
                                      fd_exact_result** out) {
  if (!g || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] {
    *out = new fd_exact_result{
        min_defect_monochromatic(g->g, k, o ? o->o : SolveOptions{})};
  });
}

fd_status fd_exact_result_value(const fd_exact_result* r, char** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(r->r.value.str()); });
}

fd_status fd_exact_result_witness(const fd_exact_result* r, fd_coloring** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_coloring{r->r.witness}; });
}

unsigned long long fd_exact_result_orientations(const fd_exact_result* r) {
  return r ? r->r.counters.orientations_enumerated : 0;
}
unsigned long long fd_exact_result_pruned(const fd_exact_result* r) {
  return r ? r->r.counters.orientations_pruned : 0;
}
unsigned long long fd_exact_result_lps(const fd_exact_result* r) {
  return r ? r->r.counters.lps_solved : 0;
}
unsigned long long fd_exact_result_colorings(const fd_exact_result* r) {
  return r ? r->r.counters.colorings_enumerated : 0;
}
void fd_exact_result_free(fd_exact_result* r) { delete r; }

/* ---- simulated annealing ---- */

fd_anneal_options* fd_anneal_options_new(void) { return new fd_anneal_options{}; }
void fd_anneal_options_set_k(fd_anneal_options* o, int k) { if (o) o->cfg.k = k; }
void fd_anneal_options_set_iterations(fd_anneal_options* o, unsigned long long n) {
  if (o) o->cfg.iterations = n;
}
void fd_anneal_options_set_restarts(fd_anneal_options* o, int n) {
  if (o) o->cfg.restarts = n;
}
void fd_anneal_options_set_initial_temperature(fd_anneal_options* o, double t0) {
  if (o) o->cfg.initial_temperature = t0;
}
void fd_anneal_options_set_cooling_rate(fd_anneal_options* o, double rate) {
  if (o) o->cfg.cooling_rate = rate;
}
void fd_anneal_options_set_move_scale(fd_anneal_options* o, double scale) {
  if (o) o->cfg.move_scale = scale;
}
void fd_anneal_options_set_seed(fd_anneal_options* o, unsigned long long seed) {
  if (o) o->cfg.seed = seed;
}
void fd_anneal_options_set_snap_denominator(fd_anneal_options* o, long max_den) {
  if (o) o->cfg.snap_max_denominator = max_den;
}
void fd_anneal_options_set_threads(fd_anneal_options* o, int threads) {
  if (o) o->cfg.threads = threads;
}
void fd_anneal_options_free(fd_anneal_options* o) { delete o; }

fd_status fd_anneal(const fd_graph* g, const fd_anneal_options* o, fd_anneal_result** out) {
  if (!g || !o || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_anneal_result{anneal(g->g, o->cfg)}; });
}

fd_status fd_anneal_with_baseline(const fd_graph* g, const fd_anneal_options* o,
                                  const fd_coloring* baseline, fd_anneal_result** out) {
  if (!g || !o || !baseline || !out) {
    g_last_error = "null argument";
    return FD_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    *out = new fd_anneal_result{seeded_anneal_with_baseline(g->g, o->cfg, baseline->c)};
  });
}

double fd_anneal_result_best_float(const fd_anneal_result* r) {
  return r ? r->r.best_float_defect : 0.0;
}
fd_status fd_anneal_result_certified(const fd_anneal_result* r, char** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(r->r.certified_defect.str()); });
}
fd_status fd_anneal_result_coloring(const fd_anneal_result* r, fd_coloring** out) {
  if (!r || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_coloring{r->r.snapped_coloring}; });
}
int fd_anneal_result_restarts(const fd_anneal_result* r) {
  return r ? static_cast<int>(r->r.trace.size()) : 0;
}
double fd_anneal_result_trace(const fd_anneal_result* r, int restart) {
  if (!r || restart < 0 || restart >= static_cast<int>(r->r.trace.size())) return 0.0;
  return r->r.trace[restart];
}
void fd_anneal_result_free(fd_anneal_result* r) { delete r; }

/* ---- family oracle ---- */

fd_status fd_family_query(const char* query, fd_family_answer** out) {
  if (!query || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_family_answer{family_from_query(query)}; });
}

fd_status fd_family_answer_value(const fd_family_answer* a, char** out) {
  if (!a || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(a->a.value.str()); });
}

int fd_family_answer_is_theorem(const fd_family_answer* a) {
  return a && a->a.status == AnswerStatus::Theorem ? 1 : 0;
}
int fd_family_answer_is_total(const fd_family_answer* a) {
  return a && a->a.total_objective ? 1 : 0;
}
int fd_family_answer_colors(const fd_family_answer* a) { return a ? a->a.k : -1; }

fd_status fd_family_answer_citation(const fd_family_answer* a, char** out) {
  if (!a || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(a->a.citation); });
}

fd_status fd_family_answer_construction(const fd_family_answer* a, fd_coloring** out) {
  if (!a || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] {
    *out = a->a.construction ? new fd_coloring{*a->a.construction} : nullptr;
  });
}

fd_status fd_family_answer_graph(const fd_family_answer* a, fd_graph** out) {
  if (!a || !out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = new fd_graph{a->a.instance}; });
}

void fd_family_answer_free(fd_family_answer* a) { delete a; }

fd_status fd_rooks_lower_bound(int m, int n, char** out) {
  if (!out) { g_last_error = "null argument"; return FD_ERR_INVALID_ARGUMENT; }
  return guarded([&] { *out = dup_string(rooks_lower_bound(m, n).str()); });
}

/* ---- conjecture audit ---- */

fd_status fd_audit(const char* conjecture, int max_param, char** out_report) {
  if (!conjecture || !out_report) {
    g_last_error = "null argument";
    return FD_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto report = audit_conjecture(conjecture, max_param);
    *out_report = dup_string(render_audit_text(report));
  });
}

}  // extern "C"
