#include "families.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fracdef {

namespace {

long ceil_div(long a, long b) { return (a + b - 1) / b; }

// Build-time certification of a FamilyAnswer's construction.
FamilyAnswer checked(FamilyAnswer answer) {
  if (answer.construction) {
    auto report = evaluate(answer.instance, *answer.construction);
    const Rational& achieved =
        answer.total_objective ? report.total_defect : report.max_defect;
    bool ok = answer.status == AnswerStatus::Theorem ? achieved == answer.value
                                                     : achieved <= answer.value;
    if (!ok)
      throw std::logic_error("family " + answer.family + ": construction certifies " +
                             achieved.str() + " against claimed " + answer.value.str());
  }
  return answer;
}

// Equitable monochromatic coloring of K_n: vertex v gets color v mod k.
std::vector<int> equitable_classes(long n, long k) {
  std::vector<int> colors(n);
  for (long v = 0; v < n; ++v) colors[v] = static_cast<int>(v % k);
  return colors;
}

}  // namespace

FamilyAnswer formula_complete(long n, long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("complete: need n >= 1 and k >= 1");
  FamilyAnswer a{
      "complete", {n, k}, static_cast<int>(k), false,
      Rational(ceil_div(n, k) - 1),   AnswerStatus::Theorem,
      FractionalColoring::monochromatic(static_cast<int>(k), equitable_classes(n, k)),
      "complete graphs: D(K_n,k) = ceil(n/k) - 1, equitable monochromatic classes",
      complete(static_cast<int>(n))};
  return checked(std::move(a));
}

FamilyAnswer formula_total_complete(long n, long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("total-complete: need n >= 1 and k >= 1");
  long q = n / k;
  FamilyAnswer a{
      "total-complete", {n, k}, static_cast<int>(k), true,
      Rational(q * (2 * n - k - q * k)), AnswerStatus::Theorem,
      FractionalColoring::monochromatic(static_cast<int>(k), equitable_classes(n, k)),
      "complete graphs: TD(K_n,k) = floor(n/k)(2n - k - floor(n/k)k)",
      complete(static_cast<int>(n))};
  return checked(std::move(a));
}

FamilyAnswer formula_fan(long n) {
  if (n < 1) throw std::invalid_argument("fan: need n >= 1");
  Graph g = fan(static_cast<int>(n));
  std::vector<Rational> reds(n + 1, Rational(0));
  reds[n] = Rational(1);  // hub
  Rational value;
  if (n == 1) {
    value = Rational(0);
  } else if (n == 2) {
    value = Rational(1);
  } else {
    long q = n / 3;
    value = Rational(2 * q, q + 1);
    Rational x(2, q + 1);
    for (long i = 0; i < n; ++i)
      if ((i + 1) % 3 == 0) reds[i] = x;
  }
  FamilyAnswer a{"fan",
                 {n},
                 2,
                 false,
                 value,
                 AnswerStatus::Theorem,
                 FractionalColoring::from_red_usages(reds),
                 "fans: D(F_n,2) = 2*floor(n/3) / (floor(n/3) + 1) for n >= 3",
                 std::move(g)};
  return checked(std::move(a));
}

FamilyAnswer formula_wheel(long n) {
  if (n < 3) throw std::invalid_argument("wheel: need n >= 3");
  Graph g = wheel(static_cast<int>(n));
  long q = ceil_div(n, 3);
  Rational x(2, q + 1);

  // Minimum independent dominating set of the cycle: multiples of 3, with the
  // straggler n-2 when n is not a multiple of 3.
  std::vector<bool> in_set(n, false);
  if (n % 3 == 0) {
    for (long v = 0; v < n; v += 3) in_set[v] = true;
  } else {
    for (long v = 0; v + 3 <= n; v += 3)
      if (v / 3 < n / 3) in_set[v] = true;
    in_set[n - 2] = true;
  }

  std::vector<Rational> reds(n + 1, Rational(0));
  for (long v = 0; v < n; ++v)
    if (in_set[v]) reds[v] = x;
  reds[n] = Rational(1);  // hub

  FamilyAnswer a{"wheel",
                 {n},
                 2,
                 false,
                 Rational(2 * q, q + 1),
                 AnswerStatus::Theorem,
                 FractionalColoring::from_red_usages(reds),
                 "wheels: D(W_n,2) = 2*ceil(n/3) / (ceil(n/3) + 1)",
                 std::move(g)};
  return checked(std::move(a));
}

FamilyAnswer formula_multipartite_equal(long m, long a) {
  if (m < 1 || a < 1) throw std::invalid_argument("multipartite: need m >= 1 and a >= 1");
  Graph g = complete_multipartite(std::vector<int>(m, static_cast<int>(a)));
  std::vector<int> colors(m * a);
  for (long p = 0; p < m; ++p)
    for (long t = 0; t < a; ++t) colors[p * a + t] = p < m / 2 ? 0 : 1;
  FamilyAnswer ans{"multipartite",
                   {m, a},
                   2,
                   false,
                   Rational((ceil_div(m, 2) - 1) * a),
                   AnswerStatus::Theorem,
                   FractionalColoring::monochromatic(2, colors),
                   "equal complete multipartite: D = (ceil(m/2) - 1) a for 2 colors",
                   std::move(g)};
  return checked(std::move(ans));
}

FamilyAnswer formula_tripartite(long a, long b, long c) {
  if (!(1 <= a && a <= b && b <= c))
    throw std::invalid_argument("tripartite: need 1 <= a <= b <= c");
  Graph g = complete_multipartite({static_cast<int>(a), static_cast<int>(b),
                                   static_cast<int>(c)});
  // A fully blue, C fully red, B mixed so A and B carry equal defect.
  Rational x(b - a, b + c - a);
  std::vector<Rational> reds;
  reds.insert(reds.end(), a, Rational(0));
  reds.insert(reds.end(), b, x);
  reds.insert(reds.end(), c, Rational(1));
  FamilyAnswer ans{"tripartite",
                   {a, b, c},
                   2,
                   false,
                   Rational(b * c) / Rational(b + c - a),
                   AnswerStatus::Theorem,
                   FractionalColoring::from_red_usages(reds),
                   "complete tripartite: D(K_{a,b,c},2) = bc/(b+c-a)",
                   std::move(g)};
  return checked(std::move(ans));
}

FamilyAnswer formula_odd_cycle_composition(long m, int construction) {
  if (m < 3) throw std::invalid_argument("cyclecomp: need m >= 3");
  if (m % 2 == 0)
    throw std::invalid_argument(
        "cyclecomp: even m rejected; C_m[2K_1] is bipartite there and its minimum "
        "defect is trivially 0");
  if (construction != 0 && construction != 1)
    throw std::invalid_argument("cyclecomp: construction index must be 0 or 1");

  Graph g = composition_with_empty(cycle(static_cast<int>(m)), 2);
  std::vector<Rational> reds(2 * m, Rational(0));
  if (construction == 0) {
    // Replicate an optimal cycle coloring: alternate, with the odd wrap-around
    // edge monochromatic red.
    for (long v = 0; v < m; ++v) {
      Rational r(v % 2 == 0 ? 1 : 0);
      reds[2 * v] = r;
      reds[2 * v + 1] = r;
    }
  } else {
    // One red and one blue vertex in every pair.
    for (long v = 0; v < m; ++v) reds[2 * v] = Rational(1);
  }
  FamilyAnswer ans{"cyclecomp",
                   {m},
                   2,
                   false,
                   Rational(2),
                   AnswerStatus::Theorem,
                   FractionalColoring::from_red_usages(reds),
                   "odd cycle blow-ups: D(C_m[2K_1],2) = 2",
                   std::move(g)};
  return checked(std::move(ans));
}

FractionalColoring rooks_parity_coloring(long m, long n) {
  std::vector<Rational> reds;
  reds.reserve(m * n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) reds.push_back(Rational((i + j) % 2 == 0 ? 1 : 0));
  return FractionalColoring::from_red_usages(reds);
}

namespace {

// The three explicit rooks matrices, stored as red usages for K_3 [] K_n in
// this library's layout: vertex (i,j) = i*n + j, i indexing the K_3 side.
const std::map<long, std::vector<std::vector<const char*>>>& special_matrices() {
  static const std::map<long, std::vector<std::vector<const char*>>> tables = {
      {5,
       {{"0", "0", "1", "1", "6/13"},
        {"8/13", "0", "11/13", "0", "1"},
        {"0", "8/13", "0", "11/13", "1"}}},
      {7,
       {{"1", "4/11", "0", "1", "1/11", "0", "1"},
        {"0", "1", "8/11", "1", "0", "8/11", "0"},
        {"1", "1", "0", "4/11", "1", "0", "1/11"}}},
      {9,
       {{"2/3", "0", "0", "0", "0", "1", "1", "1", "1"},
        {"0", "2/3", "0", "1", "1", "0", "0", "1", "1"},
        {"0", "0", "2/3", "1", "1", "1", "1", "0", "0"}}},
  };
  return tables;
}

FractionalColoring transpose_rooks(const FractionalColoring& c, long m, long n) {
  // c colors K_m [] K_n; produce the matching coloring of K_n [] K_m.
  std::vector<std::vector<Rational>> rows(m * n);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) rows[j * m + i] = c.row(static_cast<int>(i * n + j));
  return FractionalColoring(c.colors(), std::move(rows));
}

}  // namespace

const FractionalColoring& rooks_matrix_coloring(long m, long n) {
  if (m != 3 || (n != 5 && n != 7 && n != 9))
    throw std::invalid_argument("rooks matrix: only (3,5), (3,7), (3,9) are shipped");
  static std::map<long, FractionalColoring> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Rational> reds;
    for (const auto& row : special_matrices().at(n))
      for (const char* cell : row) reds.push_back(Rational::parse(cell));
    it = cache.emplace(n, FractionalColoring::from_red_usages(reds)).first;
  }
  return it->second;
}

Rational rooks_k3_extension_bound(long n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("rooks extension bound: defined for odd n >= 5");
  return Rational(n, 2) + Rational(11, 26);
}

FamilyAnswer rooks_bound(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rooks: need m, n >= 1");
  const bool swapped = m > n;
  const long a = swapped ? n : m, b = swapped ? m : n;

  Graph g = cartesian_product(complete(static_cast<int>(m)), complete(static_cast<int>(n)));
  FamilyAnswer ans{"rooks", {m, n}, 2, false, Rational(0), AnswerStatus::UpperBoundOnly,
                   std::nullopt, "", std::move(g)};

  auto orient = [&](const FractionalColoring& canonical) {
    // `canonical` colors K_a [] K_b; transpose when the caller asked (m,n)
    // with m > n.
    return swapped ? transpose_rooks(canonical, a, b) : canonical;
  };

  if (a == 3 && (b == 5 || b == 7 || b == 9)) {
    ans.value = b == 5 ? Rational(38, 13) : b == 7 ? Rational(42, 11) : Rational(14, 3);
    ans.status = AnswerStatus::UpperBoundOnly;
    ans.construction = orient(rooks_matrix_coloring(a, b));
    ans.citation = "rooks: explicit matrix beating the parity bound";
  } else if (a == 3 && b >= 11 && b % 2 == 1) {
    ans.value = rooks_k3_extension_bound(b);
    ans.status = AnswerStatus::UpperBoundOnly;
    ans.construction = std::nullopt;  // extension exists but is not printed
    ans.citation = "rooks: D(K_3 [] K_n, 2) <= n/2 + 11/26 for odd n >= 5";
  } else {
    ans.value = Rational(ceil_div(m, 2) + ceil_div(n, 2) - 2);
    bool theorem = (m % 2 == 0 && n % 2 == 0) || (m == 3 && n == 3);
    ans.status = theorem ? AnswerStatus::Theorem : AnswerStatus::UpperBoundOnly;
    ans.construction = rooks_parity_coloring(m, n);
    ans.citation = theorem
                       ? "rooks: D = m/2 + n/2 - 2 for even sides (and = 2 at (3,3))"
                       : "rooks: parity coloring, ceil(m/2) + ceil(n/2) - 2";
  }
  return checked(std::move(ans));
}

Rational rooks_lower_bound(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rooks: need m, n >= 1");
  auto td_over_order = [](long s) {
    long q = s / 2;
    return Rational(q * (2 * s - 2 - 2 * q)) / Rational(s);
  };
  return td_over_order(m) + td_over_order(n);
}

ExpansionBounds expansion_bounds(const Graph& g, long a, int k, const Rational& d_of_g) {
  if (a < 1) throw std::invalid_argument("expansion: need a >= 1");
  if (k < 1) throw std::invalid_argument("expansion: need k >= 1");
  (void)g;
  return ExpansionBounds{Rational(a * a), Rational(a) * d_of_g};
}

FractionalColoring replicate_coloring(const FractionalColoring& c, long a) {
  if (a < 1) throw std::invalid_argument("replicate: need a >= 1");
  std::vector<std::vector<Rational>> rows;
  rows.reserve(c.order() * a);
  for (int v = 0; v < c.order(); ++v)
    for (long t = 0; t < a; ++t) rows.push_back(c.row(v));
  return FractionalColoring(c.colors(), std::move(rows));
}

FamilyAnswer complete_product_partition(long n, const Graph& g,
                                        const std::vector<int>& partition, int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("product-partition: need n >= 1 and k >= 1");
  if (static_cast<int>(partition.size()) != g.order())
    throw std::invalid_argument("product-partition: partition size mismatch");
  for (int p : partition)
    if (p < 0 || p >= k)
      throw std::invalid_argument("product-partition: class out of range");
  for (auto [u, v] : g.edges())
    if (partition[u] == partition[v])
      throw std::invalid_argument("product-partition: edge inside a partition class");

  Graph instance = cartesian_product(complete(static_cast<int>(n)), g);
  std::vector<int> colors(instance.order());
  for (long i = 0; i < n; ++i)
    for (int u = 0; u < g.order(); ++u)
      colors[i * g.order() + u] = static_cast<int>((i + partition[u]) % k);

  FamilyAnswer ans{"product-partition",
                   {n},
                   k,
                   false,
                   Rational(ceil_div(n, k) - 1),
                   AnswerStatus::Theorem,
                   FractionalColoring::monochromatic(k, colors),
                   "K_n [] G with a proper k-partition of G: D = ceil(n/k) - 1",
                   std::move(instance)};
  return checked(std::move(ans));
}

}  // namespace fracdef
