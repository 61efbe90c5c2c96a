#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "glcs/holonomy.hpp"
#include "glcs/lcs_formula.hpp"
#include "glcs/lyndon.hpp"
#include "support/fixtures.hpp"
#include "support/graph_enumeration.hpp"
#include "support/tensor_oracle.hpp"

using namespace glcs;
using namespace glcs::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

using Dims = std::vector<std::size_t>;

// Lyndon words of length k over m letters by brute force over all words.
std::size_t count_lyndon_brute(std::size_t m, std::size_t k) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= m;
  std::size_t count = 0;
  Word w(k);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= m) w[k - 1 - i] = static_cast<Letter>(c % m);
    bool lyndon = true;
    for (std::size_t r = 1; r < k && lyndon; ++r) {
      Word rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      lyndon = w < rot;
    }
    count += lyndon;
  }
  return count;
}

}  // namespace

TEST_CASE("presentation") {
  SUBCASE("triangle") {
    const auto p = presentation(Graph::complete(3));
    CHECK(p.num_generators == 3);
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0].kind == Relator::Kind::triangle);
    CHECK(p.relators[0].terms == std::vector<BracketTerm>{{0, 1, 1}, {0, 2, 1}});
    CHECK(p.relators[1].terms == std::vector<BracketTerm>{{0, 1, -1}, {1, 2, 1}});
    CHECK(to_string(p.relators[0]) == "[x1,x2] + [x1,x3]");
  }
  SUBCASE("path") {
    const auto p = presentation(path(3));
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0].kind == Relator::Kind::commuting);
    CHECK(p.relators[0].terms == std::vector<BracketTerm>{{0, 1, 1}});
  }
  SUBCASE("K4") {
    const auto p = presentation(Graph::complete(4));
    std::size_t commuting = 0;
    for (const auto& r : p.relators) commuting += r.kind == Relator::Kind::commuting;
    CHECK(p.relators.size() == 11);
    CHECK(commuting == 3);
  }
  SUBCASE("relator count on all graphs up to 6 vertices") {
    for (const Graph& g : all_graphs(6)) {
      const auto kappa = clique_vector(g);
      const std::uint64_t m = kappa[1];
      CHECK(presentation(g).relators.size() == m * (m - 1) / 2 - 3 * kappa[2] + 2 * kappa[2]);
    }
  }
}

TEST_CASE("lyndon words") {
  CHECK(lyndon_words(3, 2) == std::vector<Word>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(lyndon_words(2, 5).size() == 6);
  CHECK(lyndon_words(1, 2).empty());
  CHECK(lyndon_words(1, 1) == std::vector<Word>{{0}});
  CHECK(lyndon_words(2, 4) == std::vector<Word>{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}});
}

TEST_CASE("witt dimensions") {
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t k = 1; k <= 6; ++k) {
      const Integer w = witt_dimension(m, k);
      CHECK(w == static_cast<unsigned long>(lyndon_words(m, k).size()));
      if (m <= 5) CHECK(w == static_cast<unsigned long>(count_lyndon_brute(m, k)));
    }
  }
  CHECK(witt_dimension(10, 4) == 2475);
  CHECK(witt_dimension(10, 3) == 330);
}

TEST_CASE("lyndon basis layout") {
  LyndonBasis basis(3, 4);
  CHECK(basis.dimension(1) == 3);
  CHECK(basis.dimension(2) == 3);
  CHECK(basis.dimension(3) == 8);
  CHECK(basis.dimension(4) == 18);
  CHECK(basis.size() == 32);
  const auto i = *basis.find({0, 0, 1});
  CHECK(basis.degree(i) == 3);
  CHECK(basis.bracketing(i) == "[x1,[x1,x2]]");
  CHECK(basis.bracketing(*basis.find({0, 1, 1})) == "[[x1,x2],x2]");
  CHECK(basis.bracketing(*basis.find({0, 1, 0, 2})) == "[[x1,x2],[x1,x3]]");
  CHECK_FALSE(basis.find({1, 0}).has_value());
  CHECK_THROWS(basis.bracket(*basis.find({0, 0, 1}), *basis.find({0, 1})));
}

TEST_CASE("bracket rewriting matches the tensor algebra") {
  LyndonBasis basis(3, 6);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis.degree(a) + basis.degree(b) > 6) continue;
      const WordPoly lhs = expand(basis, basis.bracket(a, b));
      const WordPoly rhs = commutator(expand(basis, a), expand(basis, b));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("antisymmetry and Jacobi on random elements") {
  std::mt19937 rng(99);
  LyndonBasis basis(4, 7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_element = [&](std::size_t degree) {
    LieElement x;
    const std::size_t lo = basis.first_index(degree);
    for (std::size_t i = lo; i < lo + basis.dimension(degree); ++i) {
      if (int c = coeff(rng); c != 0 && rng() % 3 == 0) x.emplace_back(static_cast<std::uint32_t>(i), c);
    }
    return x;
  };
  std::uniform_int_distribution<std::size_t> deg(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_element(deg(rng));
    const auto y = random_element(deg(rng));
    const auto z = random_element(1);
    CHECK(lie_add(lie_bracket(basis, x, y), lie_bracket(basis, y, x)).empty());
    const auto jacobi = lie_add(
        lie_add(lie_bracket(basis, x, lie_bracket(basis, y, z)),
                lie_bracket(basis, y, lie_bracket(basis, z, x))),
        lie_bracket(basis, z, lie_bracket(basis, x, y)));
    CHECK(jacobi.empty());
  }
}

TEST_CASE("graded dimensions") {
  SUBCASE("triangle") {
    const auto d = graded_dims(presentation(Graph::complete(3)), 3);
    CHECK(d.free_dims == Dims{3, 3, 8});
    CHECK(d.ideal_dims == Dims{0, 2, 6});
    CHECK(d.quotient_dims == Dims{3, 1, 2});
    const nlohmann::json j = d;
    CHECK(j[0]["degree"] == "1");
    CHECK(j[2]["free"] == "8");
    CHECK(j[2]["quotient"] == "2");
  }
  SUBCASE("path") {
    CHECK(graded_dims(presentation(path(3)), 3).quotient_dims == Dims{2, 0, 0});
  }
  SUBCASE("K4 degree two") {
    const auto d = graded_dims(presentation(Graph::complete(4)), 2);
    CHECK(d.free_dims[1] == 15);
    CHECK(d.ideal_dims[1] == 11);
    CHECK(d.quotient_dims[1] == 4);
  }
  SUBCASE("empty presentation is free") {
    HolonomyPresentation p;
    p.num_generators = 2;
    CHECK(graded_dims(p, 5).quotient_dims == Dims{2, 1, 2, 3, 6});
  }
}

TEST_CASE("the third triangle bracket lies in the span of the other two") {
  auto p = presentation(Graph::complete(3));
  const auto before = graded_dims(p, 4);
  p.relators.push_back({Relator::Kind::triangle, {{0, 2, -1}, {1, 2, -1}}});  // [x3, x1 + x2]
  const auto after = graded_dims(p, 4);
  CHECK(after.ideal_dims == before.ideal_dims);
  // a bracket outside the span does change the ideal
  p.relators.push_back({Relator::Kind::commuting, {{0, 1, 1}}});
  CHECK(graded_dims(p, 2).ideal_dims[1] == 3);
}

TEST_CASE("brute-force ranks") {
  CHECK(phi_bruteforce(Graph::complete(3), 5).phi == ints({3, 1, 2, 3, 6}));
  CHECK(phi_bruteforce(path(2), 3).phi == ints({1, 0, 0}));
  CHECK(phi_bruteforce(pyramid_k4(), 3).phi == ints({11, 7, 16}));
  CHECK(phi_bruteforce(octahedron(), 3).phi == ints({12, 8, 16}));
  CHECK(phi_bruteforce(Graph::complete(4), 4).phi == ints({6, 4, 10, 21}));
  CHECK(phi_bruteforce(two_triangles(), 3).phi == ints({5, 2, 4}));
  CHECK(phi_bruteforce(four_cycle(), 4).phi == ints({4, 0, 0, 0}));
  CHECK(phi_bruteforce(Graph::from_edges(3, {}), 2).phi == ints({0, 0}));
}

TEST_CASE("degree-two oracle equals the triangle count on all graphs up to 6 vertices") {
  for (const Graph& g : all_graphs(6)) {
    const auto phi = phi_bruteforce(g, 2);
    CHECK(phi[1] == static_cast<unsigned long>(g.num_edges()));
    CHECK(phi[2] == static_cast<unsigned long>(clique_vector(g)[2]));
  }
}

TEST_CASE("oracle matches the clique formula on connected graphs up to 6 vertices") {
  for (const Graph& g : all_graphs(6, true)) {
    CHECK(phi_bruteforce(g, 4) == phi_from_exponents(glcs_exponents(clique_vector(g)), 4));
  }
}

TEST_CASE("feasibility guard") {
  CHECK_THROWS_AS(phi_bruteforce(Graph::complete(8), 5), FeasibilityError);
  try {
    phi_bruteforce(Graph::complete(4), 4, FeasibilityLimits{.max_dimension = 50});
    FAIL("expected a feasibility error");
  } catch (const FeasibilityError& e) {
    CHECK(e.degree() == 4);
    CHECK(e.estimate() == 315);
  }
  CHECK_NOTHROW(phi_bruteforce(Graph::complete(4), 3, FeasibilityLimits{.max_dimension = 70}));
}

TEST_CASE("Mayer-Vietoris") {
  SUBCASE("triangle at a vertex") {
    const auto r = verify_mayer_vietoris(Graph::complete(3), 2, 3);
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].whole == r.rows[0].star);
    CHECK(r.rows[0].rest == r.rows[0].seam);
  }
  SUBCASE("two triangles at an apex") {
    const auto r = verify_mayer_vietoris(two_triangles(), 0, 3);
    CHECK(r.passed());
    CHECK(r.rows[0].whole == 5);
    CHECK(r.rows[1].whole == 2);
    CHECK(r.rows[2].whole == 4);
  }
  SUBCASE("pyramid plus K4 at w") {
    const Graph g = pyramid_k4();
    const auto r = verify_mayer_vietoris(g, vertex_named(g, "w"), 2);
    CHECK(r.passed());
    CHECK(r.rows[0].whole == 11);
    CHECK(r.rows[0].seam == 3);
    CHECK(r.rows[0].rest == 8);
    CHECK(r.rows[0].star == 6);
    CHECK(r.rows[1].whole == 7);
    CHECK(r.rows[1].seam == 1);
    CHECK(r.rows[1].rest == 4);
    CHECK(r.rows[1].star == 4);
  }
}

TEST_CASE("kernel generation") {
  SUBCASE("triangle over an edge") {
    const auto r = verify_kernel_generation(Graph::complete(3), Graph({0, 1}, {Edge(0, 1)}), 3);
    CHECK(r.passed());
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].kernel == 2);
    CHECK(r.rows[1].kernel == 1);
    CHECK(r.rows[2].kernel == 2);
  }
  SUBCASE("graph over itself") {
    const Graph g = two_triangles();
    const auto r = verify_kernel_generation(g, g, 3);
    CHECK(r.passed());
    for (const auto& row : r.rows) CHECK(row.kernel == 0);
  }
  SUBCASE("two triangles over the first") {
    const Graph g = two_triangles();
    const auto r = verify_kernel_generation(g, g.induced(std::vector<Vertex>{0, 1, 2}), 2);
    CHECK(r.passed());
    CHECK(r.rows[0].kernel == 2);
    CHECK(r.rows[1].kernel == 1);
  }
  SUBCASE("pair that is not triangle complete") {
    const Graph g = two_triangles();
    CHECK_THROWS_AS(verify_kernel_generation(g, Graph({0, 1, 2}, {Edge(0, 1), Edge(1, 2)}), 2),
                    GraphError);
  }
}

TEST_CASE("large relator coefficients fall back to arbitrary precision") {
  const std::int64_t big = std::int64_t{1} << 40;
  HolonomyPresentation p;
  p.num_generators = 3;
  p.relators.push_back({Relator::Kind::commuting, {{0, 1, big}, {0, 2, 3}}});
  p.relators.push_back({Relator::Kind::commuting, {{0, 1, 3}, {0, 2, big}}});
  p.relators.push_back({Relator::Kind::commuting, {{0, 1, big + 3}, {0, 2, big + 3}}});
  const auto d = graded_dims(p, 4);
  CHECK(d.ideal_dims[1] == 2);
  // the same ideal as [x1,x2], [x1,x3]
  HolonomyPresentation q;
  q.num_generators = 3;
  q.relators.push_back({Relator::Kind::commuting, {{0, 1, 1}}});
  q.relators.push_back({Relator::Kind::commuting, {{0, 2, 1}}});
  CHECK(d.ideal_dims == graded_dims(q, 4).ideal_dims);
}
