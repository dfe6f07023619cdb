// Exercises the shared-library C API surface only (no core headers).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fracdef/fracdef.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  fd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph parse, format, and errors") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_parse("3 3\n0 1\n1 2\n0 2\n", &g) == FD_OK);
  CHECK(fd_graph_order(g) == 3);
  CHECK(fd_graph_size(g) == 3);
  char* text = nullptr;
  REQUIRE(fd_graph_format(g, &text) == FD_OK);
  CHECK(take(text) == "3 3\n0 1\n0 2\n1 2\n");
  fd_graph_free(g);

  fd_graph* bad = nullptr;
  CHECK(fd_graph_parse("2 1\n0 2\n", &bad) == FD_ERR_PARSE);
  CHECK(std::string(fd_last_error()).find("out of range") != std::string::npos);
  CHECK(fd_graph_parse(nullptr, &bad) == FD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graph specs") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("fan 6", &g) == FD_OK);
  CHECK(fd_graph_order(g) == 7);
  CHECK(fd_graph_size(g) == 11);
  char* name = nullptr;
  REQUIRE(fd_graph_name(g, &name) == FD_OK);
  CHECK(take(name) == "F6");
  fd_graph_free(g);

  REQUIRE(fd_graph_from_spec("hajos", &g) == FD_OK);
  CHECK(fd_graph_order(g) == 6);
  fd_graph_free(g);

  CHECK(fd_graph_from_spec("mystery 4", &g) == FD_ERR_INVALID_ARGUMENT);
  CHECK(fd_graph_from_spec("fan", &g) == FD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("coloring round-trip and evaluation") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("cycle 4", &g) == FD_OK);
  fd_coloring* c = nullptr;
  REQUIRE(fd_coloring_parse("1 0\n0 1\n1 0\n0 1\n", 2, &c) == FD_OK);
  CHECK(fd_coloring_colors(c) == 2);
  CHECK(fd_coloring_order(c) == 4);

  fd_defect_report* report = nullptr;
  REQUIRE(fd_evaluate(g, c, &report) == FD_OK);
  char* maxd = nullptr;
  REQUIRE(fd_defect_report_max(report, &maxd) == FD_OK);
  CHECK(take(maxd) == "0");
  char* vertex = nullptr;
  REQUIRE(fd_defect_report_vertex(report, 2, &vertex) == FD_OK);
  CHECK(take(vertex) == "0");
  fd_defect_report_free(report);
  fd_coloring_free(c);

  fd_coloring* bad = nullptr;
  CHECK(fd_coloring_parse("1/3 1/3\n", 2, &bad) == FD_ERR_PARSE);
  fd_graph_free(g);
}

TEST_CASE("exact solver over the API certifies the Hajos value") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("hajos", &g) == FD_OK);
  fd_exact_result* res = nullptr;
  REQUIRE(fd_min_defect_2(g, nullptr, &res) == FD_OK);
  char* value = nullptr;
  REQUIRE(fd_exact_result_value(res, &value) == FD_OK);
  CHECK(take(value) == "4/3");

  fd_coloring* witness = nullptr;
  REQUIRE(fd_exact_result_witness(res, &witness) == FD_OK);
  fd_defect_report* report = nullptr;
  REQUIRE(fd_evaluate(g, witness, &report) == FD_OK);
  char* certified = nullptr;
  REQUIRE(fd_defect_report_max(report, &certified) == FD_OK);
  CHECK(take(certified) == "4/3");
  CHECK(fd_exact_result_lps(res) > 0);

  fd_defect_report_free(report);
  fd_coloring_free(witness);
  fd_exact_result_free(res);
  fd_graph_free(g);
}

TEST_CASE("exact options: TD and caps") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("complete 5", &g) == FD_OK);
  fd_exact_result* res = nullptr;
  REQUIRE(fd_min_total_defect(g, 2, nullptr, &res) == FD_OK);
  char* value = nullptr;
  REQUIRE(fd_exact_result_value(res, &value) == FD_OK);
  CHECK(take(value) == "8");
  CHECK(fd_exact_result_colorings(res) > 0);
  fd_exact_result_free(res);

  fd_solve_options* opts = fd_solve_options_new();
  fd_solve_options_set_coloring_cap(opts, 4);
  CHECK(fd_min_total_defect(g, 2, opts, &res) == FD_ERR_TOO_LARGE);
  CHECK(std::string(fd_last_error()).find("cap") != std::string::npos);
  fd_solve_options_free(opts);
  fd_graph_free(g);
}

TEST_CASE("annealing over the API is deterministic") {
  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("cycle 4", &g) == FD_OK);
  fd_anneal_options* opts = fd_anneal_options_new();
  fd_anneal_options_set_iterations(opts, 5000);
  fd_anneal_options_set_restarts(opts, 2);
  fd_anneal_options_set_seed(opts, 5);

  fd_anneal_result* a = nullptr;
  fd_anneal_result* b = nullptr;
  REQUIRE(fd_anneal(g, opts, &a) == FD_OK);
  REQUIRE(fd_anneal(g, opts, &b) == FD_OK);
  char* ca = nullptr;
  char* cb = nullptr;
  REQUIRE(fd_anneal_result_certified(a, &ca) == FD_OK);
  REQUIRE(fd_anneal_result_certified(b, &cb) == FD_OK);
  CHECK(take(ca) == "0");
  CHECK(take(cb) == "0");
  CHECK(fd_anneal_result_best_float(a) == fd_anneal_result_best_float(b));
  CHECK(fd_anneal_result_restarts(a) == 2);

  fd_anneal_result_free(a);
  fd_anneal_result_free(b);
  fd_anneal_options_free(opts);
  fd_graph_free(g);
}

TEST_CASE("family oracle over the API") {
  fd_family_answer* ans = nullptr;
  REQUIRE(fd_family_query("wheel 4", &ans) == FD_OK);
  char* value = nullptr;
  REQUIRE(fd_family_answer_value(ans, &value) == FD_OK);
  CHECK(take(value) == "4/3");
  CHECK(fd_family_answer_is_theorem(ans) == 1);
  CHECK(fd_family_answer_is_total(ans) == 0);

  fd_coloring* construction = nullptr;
  REQUIRE(fd_family_answer_construction(ans, &construction) == FD_OK);
  REQUIRE(construction != nullptr);
  fd_graph* g = nullptr;
  REQUIRE(fd_family_answer_graph(ans, &g) == FD_OK);
  fd_defect_report* report = nullptr;
  REQUIRE(fd_evaluate(g, construction, &report) == FD_OK);
  char* certified = nullptr;
  REQUIRE(fd_defect_report_max(report, &certified) == FD_OK);
  CHECK(take(certified) == "4/3");
  fd_defect_report_free(report);
  fd_graph_free(g);
  fd_coloring_free(construction);
  fd_family_answer_free(ans);

  // the rooks extension case has no construction
  REQUIRE(fd_family_query("rooks 3 11", &ans) == FD_OK);
  REQUIRE(fd_family_answer_construction(ans, &construction) == FD_OK);
  CHECK(construction == nullptr);
  fd_family_answer_free(ans);

  CHECK(fd_family_query("nope 1", &ans) == FD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rooks lower bound and transforms over the API") {
  char* value = nullptr;
  REQUIRE(fd_rooks_lower_bound(4, 5, &value) == FD_OK);
  CHECK(take(value) == "13/5");

  fd_graph* g = nullptr;
  REQUIRE(fd_graph_from_spec("complete 2", &g) == FD_OK);
  fd_coloring* c = nullptr;
  REQUIRE(fd_coloring_parse("2/3 1/3\n1/3 2/3\n", 2, &c) == FD_OK);
  fd_coloring* fixed = nullptr;
  REQUIRE(fd_ensure_monochromatic_representatives(g, c, &fixed) == FD_OK);
  char* text = nullptr;
  REQUIRE(fd_coloring_format(fixed, &text) == FD_OK);
  CHECK(take(text) == "1 0\n0 1\n");
  fd_coloring_free(fixed);

  fd_coloring* mono = nullptr;
  REQUIRE(fd_make_monochromatic_total(g, c, &mono) == FD_OK);
  fd_coloring_free(mono);
  fd_coloring_free(c);
  fd_graph_free(g);
}

TEST_CASE("audit renders a table and never asserts") {
  char* report = nullptr;
  REQUIRE(fd_audit("conj3a", 5, &report) == FD_OK);
  std::string text = take(report);
  CHECK(text.find("consistent") != std::string::npos);
  CHECK(text.find("no conjecture is asserted") != std::string::npos);
  CHECK(fd_audit("conj9", 5, &report) == FD_ERR_INVALID_ARGUMENT);
}

TEST_CASE("version string") {
  CHECK(std::string(fd_version()).size() > 0);
}
