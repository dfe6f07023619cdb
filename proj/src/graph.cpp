#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"

namespace fracdef {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        std::string name) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw std::invalid_argument("graph: endpoint out of range in edge (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.name_ = std::move(name);
  g.adj_.resize(n);
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adj_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_bipartite(std::vector<int>* side) const {
  std::vector<int> color(n_, -1);
  std::deque<int> queue;
  for (int s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(color);
  return true;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges), "P" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, std::move(edges), "C" + std::to_string(n));
}

Graph fan(int n) {
  if (n < 1) throw std::invalid_argument("fan: order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);  // hub last
  return Graph::from_edges(n + 1, std::move(edges), "F" + std::to_string(n));
}

Graph wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel: order must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n);  // hub last
  return Graph::from_edges(n + 1, std::move(edges), "W" + std::to_string(n));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges), "K" + std::to_string(n));
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("multipartite: needs at least one part");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("multipartite: part sizes must be positive");

  std::vector<int> part;
  for (size_t p = 0; p < sizes.size(); ++p)
    part.insert(part.end(), sizes[p], static_cast<int>(p));
  int n = static_cast<int>(part.size());

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) edges.emplace_back(u, v);

  std::string name = "K(";
  for (size_t p = 0; p < sizes.size(); ++p)
    name += (p ? "," : "") + std::to_string(sizes[p]);
  name += ")";
  return Graph::from_edges(n, std::move(edges), std::move(name));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument("cartesian_product: factors must be nonempty");
  int nh = h.order();
  int n = g.order() * nh;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    for (int j = 0; j < nh; ++j) edges.emplace_back(u * nh + j, v * nh + j);
  for (int i = 0; i < g.order(); ++i)
    for (auto [u, v] : h.edges()) edges.emplace_back(i * nh + u, i * nh + v);
  std::string name = (g.name().empty() ? "G" : g.name()) + "x" +
                     (h.name().empty() ? "H" : h.name());
  return Graph::from_edges(n, std::move(edges), std::move(name));
}

Graph composition_with_empty(const Graph& g, int a) {
  if (a < 1) throw std::invalid_argument("composition: blow-up factor must be >= 1");
  if (g.order() == 0) throw std::invalid_argument("composition: base graph must be nonempty");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    for (int s = 0; s < a; ++s)
      for (int t = 0; t < a; ++t) edges.emplace_back(u * a + s, v * a + t);
  std::string name = (g.name().empty() ? "G" : g.name()) + "[" + std::to_string(a) + "K1]";
  return Graph::from_edges(g.order() * a, std::move(edges), std::move(name));
}

Graph circulant(int n, const std::vector<int>& offsets) {
  if (n < 1) throw std::invalid_argument("circulant: order must be >= 1");
  std::set<std::pair<int, int>> edges;
  std::string name = "C" + std::to_string(n) + "(";
  for (size_t i = 0; i < offsets.size(); ++i) {
    int d = offsets[i];
    if (d < 1 || 2 * d > n || (2 * d == n && n % 2 == 1))
      throw std::invalid_argument("circulant: offset out of range");
    for (int v = 0; v < n; ++v) {
      int w = (v + d) % n;
      edges.emplace(std::min(v, w), std::max(v, w));
    }
    name += (i ? "," : "") + std::to_string(d);
  }
  name += ")";
  return Graph::from_edges(n, {edges.begin(), edges.end()}, std::move(name));
}

Graph hajos() {
  return Graph::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}},
      "hajos");
}

namespace {

// Splits into lines, dropping comment lines ('#' first non-space char) and
// blank lines. Keeps 1-based source line numbers for error reporting.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
    ++lineno;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.emplace_back(lineno, line);
  }
  return out;
}

bool parse_ints(const std::string& line, std::vector<long>& out) {
  out.clear();
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) return false;
      out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Graph read_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty())
    throw ParseError(ParseErrorKind::BadHeader, 1, "missing graph header");

  std::vector<long> header;
  if (!parse_ints(lines[0].second, header) || header.size() != 2 ||
      header[0] < 0 || header[1] < 0)
    throw ParseError(ParseErrorKind::BadHeader, lines[0].first,
                     "graph header must be \"n m\" with nonnegative integers");
  long n = header[0], m = header[1];

  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError(ParseErrorKind::EdgeCount, lines[0].first,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1));

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (long i = 1; i <= m; ++i) {
    auto [lineno, line] = lines[i];
    std::vector<long> uv;
    if (!parse_ints(line, uv) || uv.size() != 2)
      throw ParseError(ParseErrorKind::BadToken, lineno,
                       "edge line must be two integers");
    long u = uv[0], v = uv[1];
    if (u == v)
      throw ParseError(ParseErrorKind::SelfLoop, lineno,
                       "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw ParseError(ParseErrorKind::EndpointRange, lineno,
                       "endpoint out of range [0, " + std::to_string(n) + ")");
    if (!seen.emplace(u, v).second)
      throw ParseError(ParseErrorKind::DuplicateEdge, lineno,
                       "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace fracdef
