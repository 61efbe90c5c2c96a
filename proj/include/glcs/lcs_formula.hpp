#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "glcs/graph.hpp"
#include "glcs/polynomial.hpp"
#include "glcs/series.hpp"

namespace glcs {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// e_j = sum_{s >= j} (-1)^{s-j} C(s, j) kappa_s for j = 1 .. kappa_0 - 1.
ExponentVector glcs_exponents(const CliqueVector& kappa);

// Inverse binomial transform: kappa_s = sum_{j >= s} C(j, s) e_j. Entry s-1
// holds kappa_s, for s = 1 .. e.size().
std::vector<Integer> clique_counts_from_exponents(const ExponentVector& e);

// U_G(t) from the clique counts of g, truncated at `order`.
TruncatedSeries lcs_series(const Graph& g, std::size_t order);

// prod_{i=1}^{n-1} (1 - i t), the braid arrangement on n strands.
TruncatedSeries braid_series(std::size_t n, std::size_t order);

// A rank-two flat of a graphic arrangement: a triangle (mu = 2) or a pair of
// edges in no common triangle (mu = 1). Edge indices refer to g.edges().
struct Flat2 {
  std::vector<std::size_t> edges;
  int mu = 0;
  friend bool operator==(const Flat2&, const Flat2&) = default;
};

// Triangle flats first (lexicographic), then the commuting pairs.
std::vector<Flat2> rank2_flats(const Graph& g);

enum class DenominatorConvention {
  // (1 - t)^{mu(p)} per flat; agrees with the braid formula on K_3.
  corrected,
  // (1 - t) per flat, as typeset in the local-flat formula; diagnostic only.
  printed,
};

// (1 - t)^{|E|} prod_{p : mu(p) >= 2} (1 - mu(p) t) / (1 - t)^{...}.
// Throws FormulaError unless g has no K_4.
TruncatedSeries decomposable_series(const Graph& g, std::size_t order,
                                    DenominatorConvention convention = DenominatorConvention::corrected);

// Deletion-contraction with memoization on a degree-refined relabeling.
IntPolynomial chromatic_polynomial(const Graph& g);

// t^{kappa_0} prod_j (1 - j/t)^{e_j}; valid when the source graph is chordal.
// Throws FormulaError if an exponent is negative.
IntPolynomial chordal_chromatic(const CliqueVector& kappa);

// u1 * u2 / uk. Throws FormulaError if orders differ or uk is not a unit.
TruncatedSeries glue_series(const TruncatedSeries& u1, const TruncatedSeries& u2,
                            const TruncatedSeries& uk);

// Folds glue_series over the tree; complete leaves use braid_series and
// seams are decomposed recursively.
TruncatedSeries series_via_decomposition(const DecompositionTree& tree, std::size_t order);

// Betti numbers of the complement in C^l via chi(q) = q^l P(-1/q).
IntPolynomial poincare_polynomial(const Graph& g);

}  // namespace glcs
