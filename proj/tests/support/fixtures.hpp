#pragma once

#include <string>

#include "glcs/graph.hpp"

namespace glcs::testing {

// Square pyramid (base v1..v4, apex a) with w joined to v1, v2, a.
inline const std::string kPyramidK4 =
    "v1 v2\nv2 v3\nv3 v4\nv1 v4\n"
    "v1 a\nv2 a\nv3 a\nv4 a\n"
    "v1 w\nv2 w\na w\n";

inline const std::string kPyramid =
    "v1 v2\nv2 v3\nv3 v4\nv1 v4\n"
    "v1 a\nv2 a\nv3 a\nv4 a\n";

inline const std::string kOctahedron =
    "0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";

inline const std::string kTwoTriangles = "1 2\n1 3\n2 3\n2 4\n3 4\n";

inline const std::string kFourCycle = "1 2\n2 3\n3 4\n1 4\n";

inline Graph pyramid_k4() { return parse_graph(kPyramidK4); }
inline Graph pyramid() { return parse_graph(kPyramid); }
inline Graph octahedron() { return parse_graph(kOctahedron); }
inline Graph two_triangles() { return parse_graph(kTwoTriangles); }
inline Graph four_cycle() { return parse_graph(kFourCycle); }

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Vertex vertex_named(const Graph& g, const std::string& label) {
  for (Vertex x : g.vertices()) {
    if (g.label(x) == label) return x;
  }
  throw GraphError("no vertex " + label);
}

}  // namespace glcs::testing
