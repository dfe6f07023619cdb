#include "orientation.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace fracdef {

std::vector<int> Orientation::in_degrees() const {
  std::vector<int> d(n, 0);
  for (auto [tail, head] : arcs) ++d[head];
  return d;
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> d(n, 0);
  for (auto [tail, head] : arcs) ++d[tail];
  return d;
}

bool Orientation::certified_acyclic() const {
  if (static_cast<int>(topo.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (topo[i] < 0 || topo[i] >= n || pos[topo[i]] != -1) return false;
    pos[topo[i]] = i;
  }
  for (auto [tail, head] : arcs)
    if (pos[tail] >= pos[head]) return false;
  return true;
}

Orientation make_orientation(int n, std::vector<std::pair<int, int>> arcs) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [tail, head] : arcs) {
    if (tail < 0 || tail >= n || head < 0 || head >= n || tail == head)
      throw std::invalid_argument("orientation: bad arc");
    out[tail].push_back(head);
    ++indeg[head];
  }
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<int> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(topo.size()) != n)
    throw std::invalid_argument("orientation: arcs contain a directed cycle");
  return Orientation{n, std::move(arcs), std::move(topo)};
}

namespace {

// Is dst reachable from src over the currently assigned arcs?
bool reaches(const std::vector<std::vector<int>>& out, int src, int dst,
             std::vector<long long>& mark, long long stamp) {
  if (src == dst) return true;
  std::vector<int> stack{src};
  mark[src] = stamp;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : out[v]) {
      if (w == dst) return true;
      if (mark[w] != stamp) {
        mark[w] = stamp;
        stack.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

std::uint64_t enumerate_acyclic_orientations(
    const Graph& g, int edge_cap,
    const std::function<void(const Orientation&)>& visit,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&,
                             int, int)>& prune,
    std::uint64_t* pruned_events, const std::vector<int>* prefix) {
  const int m = g.size();
  if (m > edge_cap)
    throw CapError(static_cast<std::uint64_t>(edge_cap),
                   "instance too large: " + std::to_string(m) +
                       " edges exceeds the cap of " + std::to_string(edge_cap));

  const int n = g.order();
  const auto& edges = g.edges();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  std::vector<std::pair<int, int>> arcs(m);
  std::vector<long long> mark(n, -1);
  long long stamp = 0;
  std::uint64_t count = 0;

  // Attempts to orient edge e; returns false (leaving no trace) if the
  // direction closes a cycle or the subtree is pruned.
  auto try_assign = [&](int e, bool forward) -> bool {
    auto [u, v] = edges[e];
    int tail = forward ? u : v, head = forward ? v : u;
    if (reaches(out, head, tail, mark, stamp++)) return false;
    out[tail].push_back(head);
    ++outdeg[tail];
    ++indeg[head];
    arcs[e] = {tail, head};
    if (prune && prune(indeg, outdeg, tail, head)) {
      out[tail].pop_back();
      --outdeg[tail];
      --indeg[head];
      if (pruned_events) ++*pruned_events;
      return false;
    }
    return true;
  };

  auto unassign = [&](int e) {
    auto [tail, head] = arcs[e];
    out[tail].pop_back();
    --outdeg[tail];
    --indeg[head];
  };

  const int fixed = prefix ? static_cast<int>(prefix->size()) : 0;
  if (fixed > m)
    throw std::invalid_argument("enumerate: prefix longer than the edge list");

  std::function<void(int)> dfs = [&](int e) {
    if (e == m) {
      ++count;
      visit(make_orientation(n, arcs));
      return;
    }
    if (try_assign(e, true)) {
      dfs(e + 1);
      unassign(e);
    }
    if (try_assign(e, false)) {
      dfs(e + 1);
      unassign(e);
    }
  };

  // Apply the fixed prefix (used to partition the search across workers);
  // if it is cyclic or pruned, the partition is empty.
  int applied = 0;
  bool viable = true;
  for (; applied < fixed; ++applied) {
    if (!try_assign(applied, (*prefix)[applied] == 0)) {
      viable = false;
      break;
    }
  }
  if (viable) dfs(fixed);
  for (int e = applied - 1; e >= 0; --e) unassign(e);

  return count;
}

std::vector<Orientation> all_acyclic_orientations(const Graph& g, int edge_cap) {
  std::vector<Orientation> result;
  enumerate_acyclic_orientations(g, edge_cap,
                                 [&](const Orientation& o) { result.push_back(o); });
  return result;
}

LinearProgram orientation_lp(const Graph& g, const Orientation& o) {
  const int n = g.order();
  if (o.n != n || o.arcs.size() != g.edges().size())
    throw std::invalid_argument("orientation_lp: orientation does not match graph");

  LinearProgram lp;
  lp.num_vars = n + 1;  // r(0..n-1), then t
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = Rational(1);
  lp.bounds.assign(n + 1, VariableBounds{Rational(0), Rational(1)});
  lp.bounds[n] = VariableBounds{Rational(0), std::nullopt};

  // r(tail) <= r(head) per arc
  for (auto [tail, head] : o.arcs) {
    Constraint c;
    c.coeffs.assign(n + 1, Rational(0));
    c.coeffs[tail] = Rational(1);
    c.coeffs[head] = Rational(-1);
    c.rel = Relation::LessEq;
    c.rhs = Rational(0);
    lp.constraints.push_back(std::move(c));
  }

  // Linearized defect of v: out(v) are the redder neighbors, in(v) the less
  // red; df(v) = |out| r(v) + |in| (1-r(v)) + sum_in r(w) + sum_out (1-r(w)).
  std::vector<std::vector<int>> ins(n), outs(n);
  for (auto [tail, head] : o.arcs) {
    outs[tail].push_back(head);
    ins[head].push_back(tail);
  }
  for (int v = 0; v < n; ++v) {
    Constraint c;
    c.coeffs.assign(n + 1, Rational(0));
    long deg = static_cast<long>(ins[v].size() + outs[v].size());
    c.coeffs[v] += Rational(static_cast<long>(outs[v].size()) -
                            static_cast<long>(ins[v].size()));
    for (int w : ins[v]) c.coeffs[w] += Rational(1);
    for (int w : outs[v]) c.coeffs[w] -= Rational(1);
    c.coeffs[n] = Rational(-1);
    c.rel = Relation::LessEq;
    c.rhs = Rational(-deg);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

}  // namespace fracdef
