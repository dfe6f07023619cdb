#include "coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace fracdef {

FractionalColoring::FractionalColoring(int k, std::vector<std::vector<Rational>> rows)
    : k_(k), usage_(std::move(rows)) {
  if (k_ < 1) throw std::invalid_argument("coloring: needs at least one color");
  for (size_t v = 0; v < usage_.size(); ++v) {
    if (static_cast<int>(usage_[v].size()) != k_)
      throw std::invalid_argument("coloring: row " + std::to_string(v) +
                                  " does not have " + std::to_string(k_) + " entries");
    Rational sum(0);
    for (const auto& x : usage_[v]) {
      if (x.sign() < 0)
        throw std::invalid_argument("coloring: negative usage at vertex " +
                                    std::to_string(v));
      sum += x;
    }
    if (sum != Rational(1))
      throw std::invalid_argument("coloring: row " + std::to_string(v) +
                                  " sums to " + sum.str() + ", not 1");
  }
}

FractionalColoring FractionalColoring::monochromatic(int k, const std::vector<int>& colors) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(colors.size());
  for (int c : colors) {
    if (c < 0 || c >= k) throw std::invalid_argument("coloring: color out of range");
    std::vector<Rational> row(k, Rational(0));
    row[c] = Rational(1);
    rows.push_back(std::move(row));
  }
  return FractionalColoring(k, std::move(rows));
}

FractionalColoring FractionalColoring::from_red_usages(const std::vector<Rational>& reds) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(reds.size());
  for (const auto& r : reds) rows.push_back({r, Rational(1) - r});
  return FractionalColoring(2, std::move(rows));
}

std::vector<Rational> FractionalColoring::red_usages() const {
  if (k_ != 2) throw std::invalid_argument("red_usages: defined for k = 2 only");
  std::vector<Rational> out;
  out.reserve(usage_.size());
  for (const auto& row : usage_) out.push_back(row[0]);
  return out;
}

bool FractionalColoring::vertex_monochromatic(int v) const {
  for (const auto& x : usage_.at(v))
    if (x == Rational(1)) return true;
  return false;
}

bool FractionalColoring::all_monochromatic() const {
  for (int v = 0; v < order(); ++v)
    if (!vertex_monochromatic(v)) return false;
  return true;
}

bool FractionalColoring::lex_less(const FractionalColoring& o) const {
  if (order() != o.order() || k_ != o.k_)
    throw std::invalid_argument("lex_less: dimension mismatch");
  for (int v = 0; v < order(); ++v)
    for (int j = 0; j < k_; ++j) {
      if (usage_[v][j] < o.usage_[v][j]) return true;
      if (o.usage_[v][j] < usage_[v][j]) return false;
    }
  return false;
}

Rational edge_overlap(const FractionalColoring& c, int u, int v) {
  if (u == v) throw std::invalid_argument("edge_overlap: endpoints must differ");
  Rational sum(0);
  for (int j = 0; j < c.colors(); ++j) sum += min(c.usage(u, j), c.usage(v, j));
  return sum;
}

DefectReport evaluate(const Graph& g, const FractionalColoring& c) {
  if (c.order() != g.order())
    throw std::invalid_argument("evaluate: coloring has " + std::to_string(c.order()) +
                                " rows for a graph of order " + std::to_string(g.order()));
  DefectReport report;
  report.per_vertex.assign(g.order(), Rational(0));
  for (int v = 0; v < g.order(); ++v)
    for (int w : g.neighbors(v)) report.per_vertex[v] += edge_overlap(c, v, w);
  report.max_defect = Rational(0);
  report.total_defect = Rational(0);
  for (const auto& d : report.per_vertex) {
    report.max_defect = max(report.max_defect, d);
    report.total_defect += d;
  }
  return report;
}

Orientation induced_orientation(const Graph& g, const FractionalColoring& c) {
  if (c.colors() != 2)
    throw std::invalid_argument("induced_orientation: defined for k = 2 only");
  if (c.order() != g.order())
    throw std::invalid_argument("induced_orientation: dimension mismatch");

  auto reds = c.red_usages();
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(g.size());
  for (auto [u, v] : g.edges()) {
    bool u_first = reds[u] < reds[v] || (reds[u] == reds[v] && u < v);
    arcs.emplace_back(u_first ? u : v, u_first ? v : u);
  }

  // Sorting by (r(v), v) is a topological order by construction.
  std::vector<int> topo(g.order());
  for (int v = 0; v < g.order(); ++v) topo[v] = v;
  std::sort(topo.begin(), topo.end(), [&](int a, int b) {
    if (reds[a] != reds[b]) return reds[a] < reds[b];
    return a < b;
  });
  return Orientation{g.order(), std::move(arcs), std::move(topo)};
}

FractionalColoring make_monochromatic_total(const Graph& g, const FractionalColoring& c) {
  if (c.order() != g.order())
    throw std::invalid_argument("make_monochromatic_total: dimension mismatch");
  const int k = c.colors();
  auto rows = c.rows();

  auto total_of = [&](const std::vector<std::vector<Rational>>& r) {
    return evaluate(g, FractionalColoring(k, r)).total_defect;
  };

  while (true) {
    int v = -1, j1 = -1, j2 = -1;
    for (int u = 0; u < g.order() && v < 0; ++u) {
      int first = -1, second = -1;
      for (int j = 0; j < k; ++j) {
        if (rows[u][j].sign() <= 0) continue;
        if (first < 0) first = j;
        else { second = j; break; }
      }
      if (second >= 0) { v = u; j1 = first; j2 = second; }
    }
    if (v < 0) break;

    auto merged_low = rows, merged_high = rows;
    merged_low[v][j1] += merged_low[v][j2];
    merged_low[v][j2] = Rational(0);
    merged_high[v][j2] += merged_high[v][j1];
    merged_high[v][j1] = Rational(0);

    // The per-vertex contribution is concave in the shifted mass, so one
    // endpoint merge is at least as good as the current split.
    rows = total_of(merged_high) < total_of(merged_low) ? std::move(merged_high)
                                                        : std::move(merged_low);
  }
  return FractionalColoring(k, std::move(rows));
}

FractionalColoring ensure_monochromatic_representatives(const Graph& g,
                                                        const FractionalColoring& c) {
  if (c.order() != g.order())
    throw std::invalid_argument("ensure_monochromatic_representatives: dimension mismatch");
  const int k = c.colors();
  if (g.order() < k)
    throw std::invalid_argument(
        "ensure_monochromatic_representatives: graph order is below the color count");

  auto rows = c.rows();
  std::vector<bool> chosen(g.order(), false);
  for (int j = 0; j < k; ++j) {
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (chosen[v]) continue;
      if (best < 0 || rows[v][j] > rows[best][j]) best = v;
    }
    chosen[best] = true;
    for (int i = 0; i < k; ++i) rows[best][i] = Rational(i == j ? 1 : 0);
  }
  return FractionalColoring(k, std::move(rows));
}

FractionalColoring read_coloring(std::string_view text, int k) {
  if (k < 1) throw std::invalid_argument("read_coloring: k must be >= 1");

  std::vector<std::vector<Rational>> rows;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++lineno;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream in(line);
    std::string tok;
    std::vector<Rational> row;
    while (in >> tok) {
      try {
        row.push_back(Rational::parse(tok));
      } catch (const std::invalid_argument& e) {
        throw ParseError(ParseErrorKind::BadRational, lineno, e.what());
      }
    }
    if (static_cast<int>(row.size()) != k)
      throw ParseError(ParseErrorKind::ColumnCount, lineno,
                       "expected " + std::to_string(k) + " entries, found " +
                           std::to_string(row.size()));
    Rational sum(0);
    for (const auto& x : row) {
      if (x.sign() < 0)
        throw ParseError(ParseErrorKind::NegativeEntry, lineno, "negative usage " + x.str());
      sum += x;
    }
    if (sum != Rational(1))
      throw ParseError(ParseErrorKind::RowSum, lineno,
                       "row sums to " + sum.str() + ", not 1");
    rows.push_back(std::move(row));
  }
  return FractionalColoring(k, std::move(rows));
}

std::string write_coloring(const FractionalColoring& c) {
  std::string out;
  for (int v = 0; v < c.order(); ++v) {
    for (int j = 0; j < c.colors(); ++j) {
      if (j) out += " ";
      out += c.usage(v, j).str();
    }
    out += "\n";
  }
  return out;
}

}  // namespace fracdef
