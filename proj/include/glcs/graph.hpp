#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glcs {

using Vertex = std::uint32_t;
using LabelTable = std::vector<std::string>;

// Unordered vertex pair stored as (smaller, larger).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return u == x || v == x; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Simple undirected graph. Vertex ids live in a shared id space so that
// subgraphs keep the ids (and labels) of the graph they were cut from.
// Edges are kept sorted; an edge's index is its position in that order.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
        std::shared_ptr<const LabelTable> labels = nullptr);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(Vertex x) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  // Zero-based position of the edge in the canonical ordering.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }

  bool is_complete() const;
  bool is_connected() const;
  std::vector<std::vector<Vertex>> connected_components() const;
  // Triangles as sorted vertex triples, in lexicographic order.
  std::vector<std::array<Vertex, 3>> triangles() const;

  Graph induced(std::span<const Vertex> subset) const;
  Graph without_vertex(Vertex x) const;
  // Edge containment (vertices of this graph need not all be in `other`).
  bool edges_within(const Graph& other) const;

  std::string label(Vertex x) const;
  const std::shared_ptr<const LabelTable>& label_table() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::shared_ptr<const LabelTable> labels_;
};

struct ParseOptions {
  // Reject repeated edges instead of merging them.
  bool strict = false;
};

// Edge-list format: "<u> <v>" per line, "v <u>" declares a vertex, '#'
// starts a comment. Tokens become ids 0..n-1 in order of first appearance.
Graph parse_graph(std::string_view text, const ParseOptions& options = {});

// Inverse of parse_graph: every vertex declared in id order, then the edges.
std::string serialize_graph(const Graph& g);

// kappa[s] counts complete subgraphs on s+1 vertices; trailing zeros are
// trimmed but kappa[0] is always present.
struct CliqueVector {
  std::vector<std::uint64_t> kappa;

  std::uint64_t operator[](std::size_t s) const {
    return s < kappa.size() ? kappa[s] : 0;
  }
  std::size_t size() const { return kappa.size(); }
  friend bool operator==(const CliqueVector&, const CliqueVector&) = default;
};

CliqueVector clique_vector(const Graph& g);

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering when chordal, otherwise the reversed
  // LexBFS order that failed verification.
  std::vector<Vertex> elimination_order;
  // A chordless cycle of length >= 4 when not chordal.
  std::vector<Vertex> chordless_cycle;
};

ChordalityResult is_chordal(const Graph& g);

// Whenever two edges of a triangle of g lie in k, so does the third.
// Throws GraphError if k is not an edge-subgraph of g.
bool is_triangle_complete(const Graph& g, const Graph& k);

// The vertex split used in the inductive step: `rest` drops the pivot,
// `star` is the closed neighborhood of the pivot and `seam` the open one,
// both induced.
struct VertexSplit {
  Graph rest;
  Graph star;
  Graph seam;
};

VertexSplit split_at_vertex(const Graph& g, Vertex pivot);

class DecompositionTree {
 public:
  enum class LeafReason { complete_graph, single_component_base };

  static DecompositionTree leaf(Graph g, LeafReason reason);
  // `pivot` is empty when the node separates connected components.
  static DecompositionTree node(Graph g, std::optional<Vertex> pivot,
                                DecompositionTree left, DecompositionTree right,
                                Graph seam);

  bool is_leaf() const { return !left_; }
  const Graph& graph() const { return graph_; }
  LeafReason leaf_reason() const { return reason_; }
  std::optional<Vertex> pivot() const { return pivot_; }
  const DecompositionTree& left() const { return *left_; }
  const DecompositionTree& right() const { return *right_; }
  const Graph& seam() const { return seam_; }

  std::vector<const DecompositionTree*> leaves() const;
  std::size_t depth() const;

 private:
  Graph graph_;
  LeafReason reason_ = LeafReason::complete_graph;
  std::optional<Vertex> pivot_;
  std::shared_ptr<const DecompositionTree> left_;
  std::shared_ptr<const DecompositionTree> right_;
  Graph seam_;
};

// Splits until every leaf is complete. Pivot: a simplicial vertex whose
// closed neighborhood is not everything if there is one, otherwise a vertex
// of minimum degree; ties go to the smallest id.
DecompositionTree decompose(const Graph& g);

std::string_view to_string(DecompositionTree::LeafReason reason);

}  // namespace glcs
