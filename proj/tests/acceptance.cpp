#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "glcs/holonomy.hpp"
#include "glcs/lcs_formula.hpp"
#include "glcs/lyndon.hpp"
#include "support/fixtures.hpp"
#include "support/graph_enumeration.hpp"

using namespace glcs;
using namespace glcs::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no time bound
  std::function<Outcome()> body;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << " vertices {";
  for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  out << " }";
  return out.str();
}

TruncatedSeries product_of_factors(std::size_t order, std::initializer_list<std::pair<long, long>> fs) {
  auto out = TruncatedSeries::one(order);
  for (auto [j, p] : fs) out *= pow(TruncatedSeries::binomial_factor(order, j), p);
  return out;
}

Outcome pyramid_plus_k4() {
  Outcome o;
  const Graph g = pyramid_k4();
  const auto e = glcs_exponents(clique_vector(g));
  o.require(e == ExponentVector{0, 4, 1}, "exponents differ from (0, 4, 1)");
  o.require(lcs_series(g, 10) == product_of_factors(10, {{2, 4}, {3, 1}}),
            "series differs from (1-2t)^4 (1-3t)");
  return o;
}

Outcome braid() {
  Outcome o;
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto e = glcs_exponents(clique_vector(Graph::complete(n)));
    std::vector<Integer> ones(n - 1, 1);
    o.require(e == ExponentVector(ones), "K_" + std::to_string(n) + " exponents");
    o.require(expand_product(e, 10) == braid_series(n, 10), "K_" + std::to_string(n) + " series");
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  std::size_t count = 0;
  for (const Graph& g : all_graphs(5, true)) {
    const auto formula = phi_from_exponents(glcs_exponents(clique_vector(g)), 4);
    o.require(phi_bruteforce(g, 4) == formula, describe(g));
    ++count;
  }
  o.require(count == 31, "expected 31 connected graphs on at most 5 vertices");
  return o;
}

Outcome gluing() {
  Outcome o;
  for (const Graph& g : all_graphs(6)) {
    const auto direct = lcs_series(g, 10);
    for (Vertex v : g.vertices()) {
      const auto s = split_at_vertex(g, v);
      const auto glued =
          glue_series(lcs_series(s.rest, 10), lcs_series(s.star, 10), lcs_series(s.seam, 10));
      o.require(glued == direct, describe(g) + " at " + std::to_string(v));
    }
  }
  return o;
}

Outcome mayer_vietoris() {
  Outcome o;
  for (const Graph& g : all_graphs(5)) {
    for (Vertex v : g.vertices()) {
      o.require(verify_mayer_vietoris(g, v, 3).passed(), describe(g) + " at " + std::to_string(v));
    }
  }
  return o;
}

Outcome chordal() {
  Outcome o;
  std::size_t count = 0;
  for (const Graph& g : all_graphs(6)) {
    if (!is_chordal(g).chordal) continue;
    ++count;
    const auto kappa = clique_vector(g);
    o.require(chordal_chromatic(kappa) == chromatic_polynomial(g), "chromatic " + describe(g));
    const auto e = glcs_exponents(kappa);
    IntPolynomial u{1};
    for (std::size_t j = 1; j <= e.size(); ++j) {
      u *= pow(IntPolynomial{1, -static_cast<long>(j)}, e[j].get_ui());
    }
    o.require(poincare_polynomial(g).negated_argument() == u, "Poincare " + describe(g));
  }
  o.require(count == 1 + 2 + 4 + 10 + 27 + 94, "chordal class count");
  return o;
}

Outcome decomposable() {
  Outcome o;
  for (const Graph& g : all_graphs(6)) {
    if (clique_vector(g)[3] != 0) continue;
    o.require(decomposable_series(g, 10) == lcs_series(g, 10), describe(g));
  }
  return o;
}

Outcome properties() {
  Outcome o;
  // clique counts <-> exponents
  for (const Graph& g : all_graphs(7)) {
    const auto kappa = clique_vector(g);
    const auto back = clique_counts_from_exponents(glcs_exponents(kappa));
    for (std::size_t s = 1; s <= 7; ++s) {
      const Integer got = s <= back.size() ? back[s - 1] : Integer(0);
      o.require(got == static_cast<unsigned long>(kappa[s]), "binomial transform " + describe(g));
    }
  }
  // exponents <-> ranks
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> entry(-8, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Integer> e;
    for (int j = 0; j < trial % 9; ++j) e.emplace_back(entry(rng));
    const ExponentVector ev(e);
    o.require(expand_lcs_product(phi_from_exponents(ev, 12), 12) == expand_product(ev, 12),
              "series round trip");
  }
  // Witt dimensions
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t k = 1; k <= 6; ++k) {
      o.require(witt_dimension(m, k) == static_cast<unsigned long>(lyndon_words(m, k).size()),
                "Witt m=" + std::to_string(m) + " k=" + std::to_string(k));
    }
  }
  // antisymmetry and Jacobi
  LyndonBasis basis(5, 7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> deg(1, 3);
  auto random_element = [&](std::size_t d) {
    LieElement x;
    const std::size_t lo = basis.first_index(d);
    for (std::size_t i = lo; i < lo + basis.dimension(d); ++i) {
      const int c = coeff(rng);
      if (c != 0 && rng() % 4 == 0) x.emplace_back(static_cast<std::uint32_t>(i), c);
    }
    return x;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_element(deg(rng));
    const auto y = random_element(deg(rng));
    const auto z = random_element(1);
    o.require(lie_add(lie_bracket(basis, x, y), lie_bracket(basis, y, x)).empty(), "antisymmetry");
    const auto jacobi = lie_add(lie_add(lie_bracket(basis, x, lie_bracket(basis, y, z)),
                                        lie_bracket(basis, y, lie_bracket(basis, z, x))),
                                lie_bracket(basis, z, lie_bracket(basis, x, y)));
    o.require(jacobi.empty(), "Jacobi");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pyramid plus K4: U = (1-2t)^4 (1-3t)", 1.0, pyramid_plus_k4},
      {2, "K_n, n = 2..8: braid product to order 10", 1.0, braid},
      {3, "oracle = formula, connected graphs <= 5 vertices, k <= 4", 0.0, oracle},
      {4, "gluing identity, graphs <= 6 vertices, every vertex, order 10", 10.0, gluing},
      {5, "Mayer-Vietoris dimensions, graphs <= 5 vertices, k <= 3", 0.0, mayer_vietoris},
      {6, "chordal graphs <= 6 vertices: chromatic and Poincare", 10.0, chordal},
      {7, "decomposable graphs <= 6 vertices: local-flat product, order 10", 0.0, decomposable},
      {8, "property suites: transforms, Witt, antisymmetry/Jacobi", 30.0, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.require(false, "time limit " + std::to_string(c.limit_seconds) + " s exceeded");
    }
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), seconds, o.pass ? "" : " -- ", o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
