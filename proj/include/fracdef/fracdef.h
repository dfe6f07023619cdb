/* fracdef: exact and heuristic solvers for minimum fractional-defect graph
 * colorings, exposed as a C API over opaque handles.
 *
 * Conventions:
 *   - Functions returning fd_status set a thread-local message retrievable
 *     via fd_last_error() on failure; out-parameters are untouched then.
 *   - All exact values cross the boundary as rational strings "p/q" (or "p"
 *     when the denominator is 1). Strings returned through char** are owned
 *     by the caller and released with fd_string_free().
 *   - Handles are released with the matching *_free(); NULL is ignored.
 */
#ifndef FRACDEF_H
#define FRACDEF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_INVALID_ARGUMENT = 1,
  FD_ERR_PARSE = 2,
  FD_ERR_TOO_LARGE = 3,
  FD_ERR_INTERNAL = 4
} fd_status;

typedef struct fd_graph fd_graph;
typedef struct fd_coloring fd_coloring;
typedef struct fd_defect_report fd_defect_report;
typedef struct fd_solve_options fd_solve_options;
typedef struct fd_exact_result fd_exact_result;
typedef struct fd_anneal_options fd_anneal_options;
typedef struct fd_anneal_result fd_anneal_result;
typedef struct fd_family_answer fd_family_answer;

const char* fd_version(void);
/* Message for the most recent failure on this thread; empty if none. */
const char* fd_last_error(void);
void fd_string_free(char* s);

/* ---- graphs -------------------------------------------------------- */
/* Text format: header "n m", then m lines "u v"; '#' comments. */
fd_status fd_graph_parse(const char* text, fd_graph** out);
/* Generator spec, e.g. "fan 6", "rooks 3 5", "cyclecomp 5 2", "hajos",
 * "multipartite 1 2 3", "circulant 10 1 3", "path 4", "cycle 5",
 * "complete 5", "wheel 4". */
fd_status fd_graph_from_spec(const char* spec, fd_graph** out);
fd_status fd_graph_format(const fd_graph* g, char** out_text);
fd_status fd_graph_name(const fd_graph* g, char** out_name);
int fd_graph_order(const fd_graph* g);
int fd_graph_size(const fd_graph* g);
void fd_graph_free(fd_graph* g);

/* ---- colorings ------------------------------------------------------ */
/* Text format: one line per vertex with k rationals; '#' comments. */
fd_status fd_coloring_parse(const char* text, int k, fd_coloring** out);
fd_status fd_coloring_format(const fd_coloring* c, char** out_text);
int fd_coloring_colors(const fd_coloring* c);
int fd_coloring_order(const fd_coloring* c);
void fd_coloring_free(fd_coloring* c);

/* ---- defect evaluation ---------------------------------------------- */
fd_status fd_evaluate(const fd_graph* g, const fd_coloring* c, fd_defect_report** out);
fd_status fd_defect_report_max(const fd_defect_report* r, char** out);
fd_status fd_defect_report_total(const fd_defect_report* r, char** out);
fd_status fd_defect_report_vertex(const fd_defect_report* r, int v, char** out);
void fd_defect_report_free(fd_defect_report* r);

fd_status fd_make_monochromatic_total(const fd_graph* g, const fd_coloring* c,
                                      fd_coloring** out);
fd_status fd_ensure_monochromatic_representatives(const fd_graph* g,
                                                  const fd_coloring* c,
                                                  fd_coloring** out);

/* ---- exact solvers --------------------------------------------------- */
fd_solve_options* fd_solve_options_new(void);
void fd_solve_options_set_prune(fd_solve_options* o, int enabled);
fd_status fd_solve_options_set_prune_threshold(fd_solve_options* o, const char* rational);
void fd_solve_options_set_edge_cap(fd_solve_options* o, int cap);
void fd_solve_options_set_coloring_cap(fd_solve_options* o, unsigned long long cap);
void fd_solve_options_set_symmetry_cut(fd_solve_options* o, int enabled);
void fd_solve_options_set_threads(fd_solve_options* o, int threads);
void fd_solve_options_free(fd_solve_options* o);

/* Exact D(G,2) via acyclic-orientation enumeration + exact LPs. */
fd_status fd_min_defect_2(const fd_graph* g, const fd_solve_options* o,
                          fd_exact_result** out);
/* Exact TD(G,k) by exhaustive monochromatic search. */
fd_status fd_min_total_defect(const fd_graph* g, int k, const fd_solve_options* o,
                              fd_exact_result** out);
/* Minimum max-defect over monochromatic colorings. */
fd_status fd_min_defect_monochromatic(const fd_graph* g, int k,
                                      const fd_solve_options* o,
                                      fd_exact_result** out);

fd_status fd_exact_result_value(const fd_exact_result* r, char** out);
fd_status fd_exact_result_witness(const fd_exact_result* r, fd_coloring** out);
unsigned long long fd_exact_result_orientations(const fd_exact_result* r);
unsigned long long fd_exact_result_pruned(const fd_exact_result* r);
unsigned long long fd_exact_result_lps(const fd_exact_result* r);
unsigned long long fd_exact_result_colorings(const fd_exact_result* r);
void fd_exact_result_free(fd_exact_result* r);

/* ---- simulated annealing --------------------------------------------- */
fd_anneal_options* fd_anneal_options_new(void);
void fd_anneal_options_set_k(fd_anneal_options* o, int k);
void fd_anneal_options_set_iterations(fd_anneal_options* o, unsigned long long n);
void fd_anneal_options_set_restarts(fd_anneal_options* o, int n);
void fd_anneal_options_set_initial_temperature(fd_anneal_options* o, double t0);
void fd_anneal_options_set_cooling_rate(fd_anneal_options* o, double rate);
void fd_anneal_options_set_move_scale(fd_anneal_options* o, double scale);
void fd_anneal_options_set_seed(fd_anneal_options* o, unsigned long long seed);
void fd_anneal_options_set_snap_denominator(fd_anneal_options* o, long max_den);
void fd_anneal_options_set_threads(fd_anneal_options* o, int threads);
void fd_anneal_options_free(fd_anneal_options* o);

fd_status fd_anneal(const fd_graph* g, const fd_anneal_options* o, fd_anneal_result** out);
/* Warm start; the result is never worse than the certified baseline. */
fd_status fd_anneal_with_baseline(const fd_graph* g, const fd_anneal_options* o,
                                  const fd_coloring* baseline, fd_anneal_result** out);

double fd_anneal_result_best_float(const fd_anneal_result* r);
fd_status fd_anneal_result_certified(const fd_anneal_result* r, char** out);
fd_status fd_anneal_result_coloring(const fd_anneal_result* r, fd_coloring** out);
int fd_anneal_result_restarts(const fd_anneal_result* r);
double fd_anneal_result_trace(const fd_anneal_result* r, int restart);
void fd_anneal_result_free(fd_anneal_result* r);

/* ---- family oracle ---------------------------------------------------- */
/* Queries: "complete n k", "total-complete n k", "fan n", "wheel n",
 * "multipartite m a", "tripartite a b c", "cyclecomp m [0|1]",
 * "rooks m n". */
fd_status fd_family_query(const char* query, fd_family_answer** out);
fd_status fd_family_answer_value(const fd_family_answer* a, char** out);
int fd_family_answer_is_theorem(const fd_family_answer* a);
int fd_family_answer_is_total(const fd_family_answer* a);
int fd_family_answer_colors(const fd_family_answer* a);
fd_status fd_family_answer_citation(const fd_family_answer* a, char** out);
/* Sets *out to NULL (FD_OK) when the answer ships no construction. */
fd_status fd_family_answer_construction(const fd_family_answer* a, fd_coloring** out);
fd_status fd_family_answer_graph(const fd_family_answer* a, fd_graph** out);
void fd_family_answer_free(fd_family_answer* a);

fd_status fd_rooks_lower_bound(int m, int n, char** out);

/* ---- conjecture audit -------------------------------------------------- */
/* conjecture in {conj1, conj2, conj3a, conj3b, conj4}; renders a text table.
 * Audits report per-instance evidence and never assert a conjecture. */
fd_status fd_audit(const char* conjecture, int max_param, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* FRACDEF_H */
