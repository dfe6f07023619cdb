// fracdef CLI: ties generators, the evaluator, exact solvers, the annealer,
// the family oracle, and the conjecture audits into reproducible runs.
// Links the shared C API only.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fracdef/fracdef.h"

namespace {

using nlohmann::json;

struct Cleanup {
  std::vector<std::function<void()>> fns;
  ~Cleanup() {
    for (auto it = fns.rbegin(); it != fns.rend(); ++it) (*it)();
  }
  void add(std::function<void()> fn) { fns.push_back(std::move(fn)); }
};

[[noreturn]] void die(fd_status status) {
  std::cerr << "error: " << fd_last_error() << "\n";
  std::exit(status == FD_ERR_TOO_LARGE ? 2 : 1);
}

void require_ok(fd_status status) {
  if (status != FD_OK) die(status);
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  fd_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
  out << text;
}

std::string join(const std::vector<std::string>& toks) {
  std::string out;
  for (const auto& t : toks) {
    if (!out.empty()) out += " ";
    out += t;
  }
  return out;
}

// A graph argument is either a readable file or a generator spec.
fd_graph* load_graph(const std::vector<std::string>& args, Cleanup& cleanup) {
  fd_graph* g = nullptr;
  if (args.size() == 1 && std::filesystem::exists(args[0])) {
    require_ok(fd_graph_parse(read_file(args[0]).c_str(), &g));
  } else {
    require_ok(fd_graph_from_spec(join(args).c_str(), &g));
  }
  cleanup.add([g] { fd_graph_free(g); });
  return g;
}

int env_threads() {
  const char* env = std::getenv("FRACDEF_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

json graph_json(fd_graph* g) {
  char* name = nullptr;
  require_ok(fd_graph_name(g, &name));
  return json{{"name", take_string(name)},
              {"n", fd_graph_order(g)},
              {"m", fd_graph_size(g)}};
}

std::string graph_line(fd_graph* g) {
  char* name = nullptr;
  require_ok(fd_graph_name(g, &name));
  std::string n = take_string(name);
  return (n.empty() ? std::string("(unnamed)") : n) +
         " (n=" + std::to_string(fd_graph_order(g)) +
         " m=" + std::to_string(fd_graph_size(g)) + ")";
}

// Every value printed has already been re-certified against the exact
// evaluator; a mismatch is a hard abort.
void recertify(fd_graph* g, fd_coloring* c, const std::string& claimed, bool total,
               bool at_most) {
  fd_defect_report* report = nullptr;
  require_ok(fd_evaluate(g, c, &report));
  char* achieved_raw = nullptr;
  require_ok(total ? fd_defect_report_total(report, &achieved_raw)
                   : fd_defect_report_max(report, &achieved_raw));
  std::string achieved = take_string(achieved_raw);
  fd_defect_report_free(report);
  bool ok = at_most ? true : achieved == claimed;  // upper bounds re-checked upstream
  if (!ok) {
    std::cerr << "certification failure: coloring evaluates to " << achieved
              << " but the reported value is " << claimed << "\n";
    std::exit(3);
  }
}

void emit(const OutputOptions& opts, const json& doc, const std::string& text) {
  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                   .count();
    std::fprintf(stderr, "# wall-time: %.3fs\n", s);
  }
};

}  // namespace

int main(int argc, char** argv) {
  Timer timer;
  CLI::App app{"minimum fractional-defect graph colorings"};
  app.require_subcommand(1);

  OutputOptions out_opts;
  app.add_option("--format", out_opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_opts.out_path, "write the witness/construction here");

  // solver knobs shared by exact/audit
  bool prune = true;
  int cap_edges = 22;
  unsigned long long cap_colorings = 20'000'000ull;
  std::string prune_threshold;

  // ---- gen ----
  std::vector<std::string> gen_spec;
  auto* gen = app.add_subcommand("gen", "generate a graph file from a family spec");
  gen->add_option("spec", gen_spec, "family spec, e.g. fan 6")->required();

  // ---- eval ----
  std::vector<std::string> eval_args;
  int eval_k = 2;
  auto* eval = app.add_subcommand("eval", "evaluate a coloring file against a graph");
  eval->add_option("files", eval_args, "graph file, then coloring file")
      ->expected(2)
      ->required();
  eval->add_option("--k", eval_k, "number of colors in the coloring file")
      ->capture_default_str();

  // ---- exact ----
  std::vector<std::string> exact_args;
  bool exact_td = false, exact_mono = false;
  int exact_k = 2;
  auto* exact = app.add_subcommand("exact", "exact minimum defect (D, TD, or mono-D)");
  exact->add_option("graph", exact_args, "graph file or family spec")->required();
  exact->add_flag("--td", exact_td, "minimum total defect TD(G,k)");
  exact->add_flag("--mono", exact_mono, "minimum over monochromatic colorings");
  exact->add_option("--k", exact_k, "colors for --td/--mono")->capture_default_str();
  exact->add_flag("--prune,!--no-prune", prune, "orientation pruning (default on)");
  exact->add_option("--prune-threshold", prune_threshold,
                    "extra prune bound (must be a valid upper bound)");
  exact->add_option("--cap-edges", cap_edges, "edge cap for the orientation solver")
      ->capture_default_str();
  exact->add_option("--cap-colorings", cap_colorings,
                    "work cap for brute-force searches")
      ->capture_default_str();

  // ---- anneal ----
  std::vector<std::string> anneal_args;
  std::string anneal_config_file, anneal_baseline_file;
  int anneal_k = 2, anneal_restarts = 10;
  unsigned long long anneal_iterations = 1'000'000, anneal_seed = 0;
  double anneal_t0 = 1.0, anneal_cooling = 0.9995, anneal_move = 0.25;
  long anneal_snap = 2520;
  auto* anneal = app.add_subcommand("anneal", "simulated annealing with exact certification");
  anneal->add_option("graph", anneal_args, "graph file or family spec")->required();
  anneal->add_option("--k", anneal_k, "number of colors")->capture_default_str();
  anneal->add_option("--iterations", anneal_iterations, "iterations per restart")
      ->capture_default_str();
  anneal->add_option("--restarts", anneal_restarts, "independent restarts")
      ->capture_default_str();
  anneal->add_option("--seed", anneal_seed, "RNG seed")->capture_default_str();
  anneal->add_option("--t0", anneal_t0, "initial temperature")->capture_default_str();
  anneal->add_option("--cooling", anneal_cooling, "geometric cooling rate")
      ->capture_default_str();
  anneal->add_option("--move-scale", anneal_move, "maximum mass moved per step")
      ->capture_default_str();
  anneal->add_option("--snap-denominator", anneal_snap,
                     "max denominator when snapping to rationals")
      ->capture_default_str();
  anneal->add_option("--config", anneal_config_file, "key=value config file");
  anneal->add_option("--baseline", anneal_baseline_file,
                     "warm-start coloring file (result never worse)");

  // ---- family ----
  std::vector<std::string> family_args;
  auto* family = app.add_subcommand("family", "closed-form family oracle");
  family->add_option("spec", family_args,
                     "e.g. fan 6 | wheel 4 | rooks 3 5 | rooks-lb 3 5 | "
                     "tripartite 1 2 3 | complete 5 2 | total-complete 5 2 | "
                     "multipartite 3 2 | cyclecomp 5")
      ->required();

  // ---- audit ----
  std::string audit_id;
  long audit_max = 6;
  auto* audit = app.add_subcommand("audit", "conjecture audits (evidence, never assertions)");
  audit->add_option("conjecture", audit_id, "conj1|conj2|conj3a|conj3b|conj4")->required();
  audit->add_option("--max", audit_max, "instance sweep bound")->capture_default_str();

  // lets --format/--out appear after the subcommand arguments
  for (auto* sub : {gen, eval, exact, anneal, family, audit}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  Cleanup cleanup;
  const int threads = env_threads();

  std::string command;
  for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

  if (gen->parsed()) {
    fd_graph* g = load_graph(gen_spec, cleanup);
    char* text = nullptr;
    require_ok(fd_graph_format(g, &text));
    std::string body = take_string(text);
    if (!out_opts.out_path.empty()) {
      write_file(out_opts.out_path, body);
      emit(out_opts,
           json{{"command", command}, {"graph", graph_json(g)}, {"file", out_opts.out_path}},
           "command: " + command + "\ngraph: " + graph_line(g) + "\nwrote " +
               out_opts.out_path + "\n");
    } else {
      emit(out_opts, json{{"command", command}, {"graph", graph_json(g)}, {"text", body}},
           body);
    }
    return 0;
  }

  if (eval->parsed()) {
    fd_graph* g = load_graph({eval_args[0]}, cleanup);
    fd_coloring* c = nullptr;
    require_ok(fd_coloring_parse(read_file(eval_args[1]).c_str(), eval_k, &c));
    cleanup.add([c] { fd_coloring_free(c); });

    fd_defect_report* report = nullptr;
    require_ok(fd_evaluate(g, c, &report));
    cleanup.add([report] { fd_defect_report_free(report); });

    char* maxd = nullptr;
    char* total = nullptr;
    require_ok(fd_defect_report_max(report, &maxd));
    require_ok(fd_defect_report_total(report, &total));
    std::string max_s = take_string(maxd), total_s = take_string(total);

    json per = json::array();
    std::string per_text;
    for (int v = 0; v < fd_graph_order(g); ++v) {
      char* dv = nullptr;
      require_ok(fd_defect_report_vertex(report, v, &dv));
      std::string s = take_string(dv);
      per.push_back(s);
      per_text += (v ? " " : "") + s;
    }

    emit(out_opts,
         json{{"command", command},
              {"graph", graph_json(g)},
              {"result", {{"max_defect", max_s}, {"total_defect", total_s}, {"per_vertex", per}}}},
         "command: " + command + "\ngraph: " + graph_line(g) + "\nmax_defect = " + max_s +
             "\ntotal_defect = " + total_s + "\nper_vertex: " + per_text + "\n");
    return 0;
  }

  if (exact->parsed()) {
    if (exact_td && exact_mono) {
      std::cerr << "error: --td and --mono are mutually exclusive\n";
      return 1;
    }
    fd_graph* g = load_graph(exact_args, cleanup);

    fd_solve_options* opts = fd_solve_options_new();
    cleanup.add([opts] { fd_solve_options_free(opts); });
    fd_solve_options_set_prune(opts, prune ? 1 : 0);
    fd_solve_options_set_edge_cap(opts, cap_edges);
    fd_solve_options_set_coloring_cap(opts, cap_colorings);
    fd_solve_options_set_threads(opts, threads);
    if (!prune_threshold.empty())
      require_ok(fd_solve_options_set_prune_threshold(opts, prune_threshold.c_str()));

    fd_exact_result* res = nullptr;
    const char* label = exact_td ? "TD" : exact_mono ? "D_mono" : "D";
    if (exact_td) {
      require_ok(fd_min_total_defect(g, exact_k, opts, &res));
    } else if (exact_mono) {
      require_ok(fd_min_defect_monochromatic(g, exact_k, opts, &res));
    } else {
      require_ok(fd_min_defect_2(g, opts, &res));
    }
    cleanup.add([res] { fd_exact_result_free(res); });

    char* value_raw = nullptr;
    require_ok(fd_exact_result_value(res, &value_raw));
    std::string value = take_string(value_raw);

    fd_coloring* witness = nullptr;
    require_ok(fd_exact_result_witness(res, &witness));
    cleanup.add([witness] { fd_coloring_free(witness); });
    recertify(g, witness, value, exact_td, /*at_most=*/false);

    char* witness_text_raw = nullptr;
    require_ok(fd_coloring_format(witness, &witness_text_raw));
    std::string witness_text = take_string(witness_text_raw);

    std::string counters_text =
        "counters: orientations=" + std::to_string(fd_exact_result_orientations(res)) +
        " pruned=" + std::to_string(fd_exact_result_pruned(res)) +
        " lps=" + std::to_string(fd_exact_result_lps(res)) +
        " colorings=" + std::to_string(fd_exact_result_colorings(res));

    std::string text = "command: " + command + "\ngraph: " + graph_line(g) + "\n" +
                       label + " = " + value + "\n" + counters_text + "\n";
    json doc{{"command", command},
             {"graph", graph_json(g)},
             {"result", {{label, value}}},
             {"counters",
              {{"orientations", fd_exact_result_orientations(res)},
               {"pruned", fd_exact_result_pruned(res)},
               {"lps", fd_exact_result_lps(res)},
               {"colorings", fd_exact_result_colorings(res)}}}};
    if (!out_opts.out_path.empty()) {
      write_file(out_opts.out_path, witness_text);
      text += "witness: " + out_opts.out_path + "\n";
      doc["witness_file"] = out_opts.out_path;
    } else {
      text += "witness-coloring:\n" + witness_text;
      doc["witness"] = witness_text;
    }
    emit(out_opts, doc, text);
    return 0;
  }

  if (anneal->parsed()) {
    fd_graph* g = load_graph(anneal_args, cleanup);

    // config file fills anything not given explicitly on the command line
    if (!anneal_config_file.empty()) {
      auto given = [&](const char* flag) { return anneal->get_option(flag)->count() > 0; };
      std::istringstream in(read_file(anneal_config_file));
      std::string line;
      int lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
          std::cerr << "error: " << anneal_config_file << ":" << lineno
                    << ": expected key=value\n";
          return 1;
        }
        std::string key = line.substr(first, eq - first);
        std::string value = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        try {
          if (key == "k") { if (!given("--k")) anneal_k = std::stoi(value); }
          else if (key == "iterations") { if (!given("--iterations")) anneal_iterations = std::stoull(value); }
          else if (key == "restarts") { if (!given("--restarts")) anneal_restarts = std::stoi(value); }
          else if (key == "seed") { if (!given("--seed")) anneal_seed = std::stoull(value); }
          else if (key == "initial_temperature") { if (!given("--t0")) anneal_t0 = std::stod(value); }
          else if (key == "cooling_rate") { if (!given("--cooling")) anneal_cooling = std::stod(value); }
          else if (key == "move_scale") { if (!given("--move-scale")) anneal_move = std::stod(value); }
          else if (key == "snap_max_denominator") { if (!given("--snap-denominator")) anneal_snap = std::stol(value); }
          else {
            std::cerr << "error: " << anneal_config_file << ":" << lineno
                      << ": unknown key '" << key << "'\n";
            return 1;
          }
        } catch (const std::exception&) {
          std::cerr << "error: " << anneal_config_file << ":" << lineno
                    << ": bad value for '" << key << "'\n";
          return 1;
        }
      }
    }

    fd_anneal_options* opts = fd_anneal_options_new();
    cleanup.add([opts] { fd_anneal_options_free(opts); });
    fd_anneal_options_set_k(opts, anneal_k);
    fd_anneal_options_set_iterations(opts, anneal_iterations);
    fd_anneal_options_set_restarts(opts, anneal_restarts);
    fd_anneal_options_set_seed(opts, anneal_seed);
    fd_anneal_options_set_initial_temperature(opts, anneal_t0);
    fd_anneal_options_set_cooling_rate(opts, anneal_cooling);
    fd_anneal_options_set_move_scale(opts, anneal_move);
    fd_anneal_options_set_snap_denominator(opts, anneal_snap);
    fd_anneal_options_set_threads(opts, threads);

    fd_anneal_result* res = nullptr;
    if (!anneal_baseline_file.empty()) {
      fd_coloring* baseline = nullptr;
      require_ok(
          fd_coloring_parse(read_file(anneal_baseline_file).c_str(), anneal_k, &baseline));
      cleanup.add([baseline] { fd_coloring_free(baseline); });
      require_ok(fd_anneal_with_baseline(g, opts, baseline, &res));
    } else {
      require_ok(fd_anneal(g, opts, &res));
    }
    cleanup.add([res] { fd_anneal_result_free(res); });

    char* certified_raw = nullptr;
    require_ok(fd_anneal_result_certified(res, &certified_raw));
    std::string certified = take_string(certified_raw);

    fd_coloring* coloring = nullptr;
    require_ok(fd_anneal_result_coloring(res, &coloring));
    cleanup.add([coloring] { fd_coloring_free(coloring); });
    recertify(g, coloring, certified, /*total=*/false, /*at_most=*/false);

    char* coloring_text_raw = nullptr;
    require_ok(fd_coloring_format(coloring, &coloring_text_raw));
    std::string coloring_text = take_string(coloring_text_raw);

    json trace = json::array();
    std::string trace_text;
    for (int r = 0; r < fd_anneal_result_restarts(res); ++r) {
      double t = fd_anneal_result_trace(res, r);
      trace.push_back(t);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", t);
      trace_text += (r ? " " : "") + std::string(buf);
    }

    std::string text = "command: " + command + "\ngraph: " + graph_line(g) +
                       "\ncertified_defect = " + certified +
                       "\nseed: " + std::to_string(anneal_seed) +
                       "\ntrace: " + trace_text + "\n";
    json doc{{"command", command},
             {"graph", graph_json(g)},
             {"result", {{"certified_defect", certified}}},
             {"seed", anneal_seed},
             {"trace", trace}};
    if (!out_opts.out_path.empty()) {
      write_file(out_opts.out_path, coloring_text);
      text += "coloring: " + out_opts.out_path + "\n";
      doc["coloring_file"] = out_opts.out_path;
    } else {
      text += "coloring:\n" + coloring_text;
      doc["coloring"] = coloring_text;
    }
    emit(out_opts, doc, text);
    return 0;
  }

  if (family->parsed()) {
    // rooks-lb is a plain rational, not a FamilyAnswer
    if (!family_args.empty() && family_args[0] == "rooks-lb") {
      if (family_args.size() != 3) {
        std::cerr << "error: rooks-lb takes two parameters\n";
        return 1;
      }
      int lb_m = 0, lb_n = 0;
      try {
        lb_m = std::stoi(family_args[1]);
        lb_n = std::stoi(family_args[2]);
      } catch (const std::exception&) {
        std::cerr << "error: rooks-lb parameters must be integers\n";
        return 1;
      }
      char* value_raw = nullptr;
      require_ok(fd_rooks_lower_bound(lb_m, lb_n, &value_raw));
      std::string value = take_string(value_raw);
      emit(out_opts,
           json{{"command", command},
                {"result", {{"lower_bound", value}}},
                {"citation", "total-defect lower bound for rooks graphs"}},
           "command: " + command + "\n" + value +
               " (lower bound via total defect of the factors)\n");
      return 0;
    }

    fd_family_answer* ans = nullptr;
    require_ok(fd_family_query(join(family_args).c_str(), &ans));
    cleanup.add([ans] { fd_family_answer_free(ans); });

    char* value_raw = nullptr;
    require_ok(fd_family_answer_value(ans, &value_raw));
    std::string value = take_string(value_raw);
    char* citation_raw = nullptr;
    require_ok(fd_family_answer_citation(ans, &citation_raw));
    std::string citation = take_string(citation_raw);
    bool theorem = fd_family_answer_is_theorem(ans) == 1;
    bool total = fd_family_answer_is_total(ans) == 1;

    fd_graph* g = nullptr;
    require_ok(fd_family_answer_graph(ans, &g));
    cleanup.add([g] { fd_graph_free(g); });

    fd_coloring* construction = nullptr;
    require_ok(fd_family_answer_construction(ans, &construction));
    if (construction) cleanup.add([construction] { fd_coloring_free(construction); });

    std::string status = theorem ? "theorem" : "upper bound";
    std::string text = "command: " + command + "\ngraph: " + graph_line(g) + "\n" +
                       value + " (" + status + ": " + citation + ")\n";
    json doc{{"command", command},
             {"graph", graph_json(g)},
             {"result",
              {{total ? "TD" : "D", value}, {"status", status}, {"citation", citation}}}};

    if (construction) {
      // theorem constructions must certify exactly; bounds at most the value
      fd_defect_report* report = nullptr;
      require_ok(fd_evaluate(g, construction, &report));
      char* achieved_raw = nullptr;
      require_ok(total ? fd_defect_report_total(report, &achieved_raw)
                       : fd_defect_report_max(report, &achieved_raw));
      std::string achieved = take_string(achieved_raw);
      fd_defect_report_free(report);
      if (theorem && achieved != value) {
        std::cerr << "certification failure: construction evaluates to " << achieved
                  << "\n";
        return 3;
      }
      char* ctext_raw = nullptr;
      require_ok(fd_coloring_format(construction, &ctext_raw));
      std::string ctext = take_string(ctext_raw);
      if (!out_opts.out_path.empty()) {
        write_file(out_opts.out_path, ctext);
        text += "construction: " + out_opts.out_path + "\n";
        doc["construction_file"] = out_opts.out_path;
      } else {
        text += "construction:\n" + ctext;
        doc["construction"] = ctext;
      }
      doc["construction_certifies"] = achieved;
    } else {
      text += "construction: none shipped for this case\n";
    }
    emit(out_opts, doc, text);
    return 0;
  }

  if (audit->parsed()) {
    char* report_raw = nullptr;
    require_ok(fd_audit(audit_id.c_str(), static_cast<int>(audit_max), &report_raw));
    std::string report = take_string(report_raw);
    emit(out_opts, json{{"command", command}, {"report", report}}, report);
    return 0;
  }

  return 0;
}
