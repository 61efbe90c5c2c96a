#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "glcs/graph.hpp"
#include "glcs/series.hpp"

namespace glcs {

// c * [x_i, x_j] with i < j (zero-based generator indices).
struct BracketTerm {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

struct Relator {
  enum class Kind { commuting, triangle };
  Kind kind = Kind::commuting;
  std::vector<BracketTerm> terms;
  friend bool operator==(const Relator&, const Relator&) = default;
};

// Generators x_i, one per edge (edge order of the graph), and the quadratic
// relators: [x_i, x_j] for edge pairs in no common triangle, and for each
// triangle e1 < e2 < e3 the pair [x1, x2 + x3], [x2, x1 + x3].
struct HolonomyPresentation {
  std::size_t num_generators = 0;
  std::vector<Relator> relators;
};

HolonomyPresentation presentation(const Graph& g);

std::string to_string(const Relator& r);

// Index k-1 holds the degree-k value.
struct GradedDims {
  std::vector<std::size_t> free_dims;
  std::vector<std::size_t> ideal_dims;
  std::vector<std::size_t> quotient_dims;
};

struct FeasibilityLimits {
  // Largest free Lie algebra dimension at the target degree.
  std::size_t max_dimension = 200'000;
  // Largest number of nonzero entries in the spanning rows of one degree.
  std::size_t max_entries = 50'000'000;
};

class FeasibilityError : public std::runtime_error {
 public:
  FeasibilityError(const std::string& what, std::size_t degree, std::size_t estimate);
  std::size_t degree() const { return degree_; }
  std::size_t estimate() const { return estimate_; }

 private:
  std::size_t degree_;
  std::size_t estimate_;
};

// Graded dimensions of the free Lie algebra, the relator ideal and the
// quotient up to degree `up_to`, by exact rank computations in Lyndon
// coordinates. The degree-k ideal is spanned by [b, x_i] for b in a basis of
// the degree-(k-1) ideal.
GradedDims graded_dims(const HolonomyPresentation& p, std::size_t up_to,
                       const FeasibilityLimits& limits = {});

LCSRanks phi_bruteforce(const Graph& g, std::size_t up_to, const FeasibilityLimits& limits = {});

struct MayerVietorisReport {
  struct Row {
    std::size_t degree = 0;
    std::size_t whole = 0;  // dim of the degree piece for g
    std::size_t rest = 0;   // ... for g minus the pivot
    std::size_t star = 0;   // ... for the closed neighborhood
    std::size_t seam = 0;   // ... for the open neighborhood
    bool pass = false;
  };
  Vertex pivot = 0;
  std::vector<Row> rows;

  bool passed() const;
};

// Splits g at the pivot and checks dim h_G + dim h_K = dim h_G1 + dim h_G2 in
// every degree up to `up_to`.
MayerVietorisReport verify_mayer_vietoris(const Graph& g, Vertex pivot, std::size_t up_to,
                                          const FeasibilityLimits& limits = {});

struct KernelReport {
  struct Row {
    std::size_t degree = 0;
    std::size_t kernel = 0;    // span of brackets in generators outside the subgraph
    std::size_t whole = 0;     // dim (h_G)_k
    std::size_t subgraph = 0;  // dim (h_K)_k
    bool pass = false;
  };
  std::vector<Row> rows;

  bool passed() const;
};

// For a triangle-complete pair (g, sub): the degree-k span of brackets in the
// generators of edges outside sub has dimension dim(h_G)_k - dim(h_sub)_k.
// Throws GraphError if the pair is not triangle-complete.
KernelReport verify_kernel_generation(const Graph& g, const Graph& sub, std::size_t up_to,
                                      const FeasibilityLimits& limits = {});

void to_json(nlohmann::json& j, const GradedDims& dims);
void to_json(nlohmann::json& j, const MayerVietorisReport& report);
void to_json(nlohmann::json& j, const KernelReport& report);

}  // namespace glcs
