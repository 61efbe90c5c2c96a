#include "glcs/lcs_formula.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <unordered_map>

namespace glcs {

ExponentVector glcs_exponents(const CliqueVector& kappa) {
  const std::size_t n = kappa[0];
  std::vector<Integer> e;
  for (std::size_t j = 1; j + 1 <= n; ++j) {
    Integer acc = 0;
    for (std::size_t s = j; s < kappa.size(); ++s) {
      Integer term = binomial(s, j) * Integer(static_cast<unsigned long>(kappa[s]));
      if ((s - j) % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e.push_back(std::move(acc));
  }
  return ExponentVector(std::move(e));
}

std::vector<Integer> clique_counts_from_exponents(const ExponentVector& e) {
  std::vector<Integer> kappa(e.size());
  for (std::size_t s = 1; s <= e.size(); ++s) {
    for (std::size_t j = s; j <= e.size(); ++j) kappa[s - 1] += binomial(j, s) * e[j];
  }
  return kappa;
}

TruncatedSeries lcs_series(const Graph& g, std::size_t order) {
  return expand_product(glcs_exponents(clique_vector(g)), order);
}

TruncatedSeries braid_series(std::size_t n, std::size_t order) {
  if (n < 2) throw std::invalid_argument("braid_series: n must be at least 2");
  auto out = TruncatedSeries::one(order);
  for (std::size_t i = 1; i < n; ++i) {
    out *= TruncatedSeries::binomial_factor(order, Integer(static_cast<unsigned long>(i)));
  }
  return out;
}

std::vector<Flat2> rank2_flats(const Graph& g) {
  std::vector<Flat2> out;
  const std::size_t m = g.num_edges();
  std::vector<std::vector<char>> in_triangle(m, std::vector<char>(m, 0));
  for (const auto& t : g.triangles()) {
    std::vector<std::size_t> es{*g.edge_index(t[0], t[1]), *g.edge_index(t[0], t[2]),
                                *g.edge_index(t[1], t[2])};
    std::sort(es.begin(), es.end());
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) in_triangle[es[a]][es[b]] = 1;
    }
    out.push_back({std::move(es), 2});
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!in_triangle[a][b]) out.push_back({{a, b}, 1});
    }
  }
  return out;
}

TruncatedSeries decomposable_series(const Graph& g, std::size_t order,
                                    DenominatorConvention convention) {
  const auto kappa = clique_vector(g);
  if (kappa[3] != 0) {
    throw FormulaError("not decomposable: graph contains " + std::to_string(kappa[3]) +
                       " copies of K_4");
  }
  const auto one_minus_t = TruncatedSeries::binomial_factor(order, 1);
  auto out = pow(one_minus_t, static_cast<long>(g.num_edges()));
  const auto inverse = reciprocal(one_minus_t);
  for (const auto& flat : rank2_flats(g)) {
    if (flat.mu < 2) continue;
    out *= TruncatedSeries::binomial_factor(order, flat.mu);
    out *= convention == DenominatorConvention::corrected ? pow(inverse, flat.mu) : inverse;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chromatic polynomial

namespace {

using Rows = std::vector<std::uint64_t>;

IntPolynomial falling_factorial(std::size_t n) {
  IntPolynomial out{1};
  for (std::size_t i = 0; i < n; ++i) out *= IntPolynomial::linear_root(static_cast<unsigned long>(i));
  return out;
}

// Relabels by (degree, sorted neighbor degrees), stable on ties. Not a full
// canonical form: isomorphic graphs can miss each other in the memo, but
// equal keys always mean equal polynomials.
Rows refined_form(const Rows& adj) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::vector<int>, std::size_t>> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> sig{std::popcount(adj[i])};
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i] >> j & 1) sig.push_back(std::popcount(adj[j]));
    }
    std::sort(sig.begin() + 1, sig.end());
    keys[i] = {std::move(sig), i};
  }
  std::sort(keys.begin(), keys.end());
  std::vector<std::size_t> to_new(n);
  for (std::size_t i = 0; i < n; ++i) to_new[keys[i].second] = i;
  Rows out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj[i] >> j & 1) out[to_new[i]] |= std::uint64_t{1} << to_new[j];
    }
  }
  return out;
}

class ChromaticSolver {
 public:
  IntPolynomial solve(const Rows& adj) {
    const std::size_t n = adj.size();
    std::size_t edges2 = 0;
    for (auto r : adj) edges2 += std::popcount(r);
    if (edges2 == 0) return IntPolynomial::monomial(1, n);
    if (edges2 == n * (n - 1)) return falling_factorial(n);

    const bool memoize = n <= kMemoLimit;
    Rows key;
    if (memoize) {
      key = refined_form(adj);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    std::size_t u = 0;
    while (adj[u] == 0) ++u;
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(adj[u]));

    Rows deleted = adj;
    deleted[u] &= ~(std::uint64_t{1} << v);
    deleted[v] &= ~(std::uint64_t{1} << u);

    auto result = solve(deleted) - solve(contract(adj, u, v));
    if (memoize) memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static constexpr std::size_t kMemoLimit = 10;

  // Merges v into u; parallel edges collapse because rows are bitsets.
  static Rows contract(const Rows& adj, std::size_t u, std::size_t v) {
    const std::size_t n = adj.size();
    Rows merged = adj;
    merged[u] |= merged[v];
    for (std::size_t i = 0; i < n; ++i) {
      if (merged[i] >> v & 1) merged[i] |= std::uint64_t{1} << u;
    }
    merged[u] &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    Rows out;
    out.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == v) continue;
      std::uint64_t row = merged[i] & ~(std::uint64_t{1} << v);
      const std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
      const std::uint64_t high = v + 1 < 64 ? (row >> (v + 1)) << v : 0;
      out.push_back(low | high);
    }
    return out;
  }

  std::map<Rows, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_polynomial(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 64) throw FormulaError("chromatic_polynomial: more than 64 vertices");
  std::unordered_map<Vertex, std::size_t> local;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < n; ++i) local[vs[i]] = i;
  Rows adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[local[e.u]] |= std::uint64_t{1} << local[e.v];
    adj[local[e.v]] |= std::uint64_t{1} << local[e.u];
  }
  ChromaticSolver solver;
  return solver.solve(adj);
}

IntPolynomial chordal_chromatic(const CliqueVector& kappa) {
  const auto e = glcs_exponents(kappa);
  Integer t_power = static_cast<unsigned long>(kappa[0]);
  IntPolynomial out{1};
  for (std::size_t j = 1; j <= e.size(); ++j) {
    const Integer ej = e[j];
    if (ej < 0) {
      throw FormulaError("chordal_chromatic: exponent e_" + std::to_string(j) + " = " +
                         to_decimal(ej) + " is negative; graph is not chordal");
    }
    out *= pow(IntPolynomial::linear_root(static_cast<unsigned long>(j)), ej.get_ui());
    t_power -= ej;
  }
  if (t_power < 0) throw FormulaError("chordal_chromatic: negative power of t");
  return out * IntPolynomial::monomial(1, t_power.get_ui());
}

TruncatedSeries glue_series(const TruncatedSeries& u1, const TruncatedSeries& u2,
                            const TruncatedSeries& uk) {
  if (u1.order() != u2.order() || u1.order() != uk.order()) {
    throw FormulaError("glue_series: truncation orders differ");
  }
  if (!uk.is_unit()) throw FormulaError("glue_series: seam series has constant term != 1");
  return u1 * u2 * reciprocal(uk);
}

TruncatedSeries series_via_decomposition(const DecompositionTree& tree, std::size_t order) {
  if (tree.is_leaf()) {
    const Graph& g = tree.graph();
    if (!g.is_complete()) throw FormulaError("decomposition leaf is not a complete graph");
    return g.num_vertices() >= 2 ? braid_series(g.num_vertices(), order)
                                 : TruncatedSeries::one(order);
  }
  return glue_series(series_via_decomposition(tree.left(), order),
                     series_via_decomposition(tree.right(), order),
                     series_via_decomposition(decompose(tree.seam()), order));
}

IntPolynomial poincare_polynomial(const Graph& g) {
  const auto chi = chromatic_polynomial(g);
  const std::size_t l = g.num_vertices();
  if (chi.degree() != static_cast<long>(l)) {
    throw FormulaError("poincare_polynomial: chromatic polynomial has unexpected degree");
  }
  std::vector<Integer> betti(l + 1);
  for (std::size_t i = 0; i <= l; ++i) {
    betti[i] = chi.coeff(l - i);
    if (i % 2 == 1) betti[i] = -betti[i];
    if (betti[i] < 0) {
      throw FormulaError("poincare_polynomial: negative Betti number b_" + std::to_string(i));
    }
  }
  return IntPolynomial(std::move(betti));
}

}  // namespace glcs
