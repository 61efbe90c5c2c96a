#include "glcs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cassert>
#include <deque>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace glcs {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges,
             std::shared_ptr<const LabelTable> labels)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), labels_(std::move(labels)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw GraphError("duplicate vertex");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw GraphError("duplicate edge");
  }
  const Vertex bound = vertices_.empty() ? 0 : vertices_.back() + 1;
  adjacency_.assign(bound, {});
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw GraphError("edge endpoint is not a vertex of the graph");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::complete(std::size_t n) {
  std::vector<Vertex> vs(n);
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) {
    vs[i] = i;
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph(std::move(vs), std::move(es));
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Vertex> vs(n);
  for (Vertex i = 0; i < n; ++i) vs[i] = i;
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.emplace_back(a, b);
  return Graph(std::move(vs), std::move(es));
}

bool Graph::has_vertex(Vertex x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex x) const {
  if (x >= adjacency_.size()) return {};
  return adjacency_[x];
}

bool Graph::is_complete() const {
  const std::size_t n = vertices_.size();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::vector<Vertex>> Graph::connected_components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(adjacency_.size(), 0);
  for (Vertex root : vertices_) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Vertex y : adjacency_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

std::vector<std::array<Vertex, 3>> Graph::triangles() const {
  std::vector<std::array<Vertex, 3>> out;
  for (const Edge& e : edges_) {
    // Third vertex above both endpoints so each triangle appears once.
    auto nu = neighbors(e.u);
    auto nv = neighbors(e.v);
    auto iu = std::upper_bound(nu.begin(), nu.end(), e.v);
    auto iv = std::upper_bound(nv.begin(), nv.end(), e.v);
    std::vector<Vertex> common;
    std::set_intersection(iu, nu.end(), iv, nv.end(), std::back_inserter(common));
    for (Vertex w : common) out.push_back({e.u, e.v, w});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const Vertex> subset) const {
  std::vector<Vertex> vs(subset.begin(), subset.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (std::binary_search(vs.begin(), vs.end(), e.u) &&
        std::binary_search(vs.begin(), vs.end(), e.v)) {
      es.push_back(e);
    }
  }
  return Graph(std::move(vs), std::move(es), labels_);
}

Graph Graph::without_vertex(Vertex x) const {
  std::vector<Vertex> rest;
  rest.reserve(vertices_.size());
  for (Vertex y : vertices_) {
    if (y != x) rest.push_back(y);
  }
  return induced(rest);
}

bool Graph::edges_within(const Graph& other) const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return other.has_edge(e); });
}

std::string Graph::label(Vertex x) const {
  if (labels_ && x < labels_->size()) return (*labels_)[x];
  return std::to_string(x);
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, const ParseOptions& options) {
  auto labels = std::make_shared<LabelTable>();
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.emplace(std::string(token), static_cast<Vertex>(labels->size()));
    if (inserted) labels->emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two tokens, found " + std::to_string(tokens.size()));
    }
    if (tokens[0] == "v") {
      intern(tokens[1]);
    } else {
      if (tokens[0] == tokens[1]) {
        throw ParseError(line_no, "self-loop at vertex '" + std::string(tokens[0]) + "'");
      }
      const Vertex a = intern(tokens[0]);
      const Vertex b = intern(tokens[1]);
      const Edge e(a, b);
      if (seen.insert(e).second) {
        edges.push_back(e);
      } else if (options.strict) {
        throw ParseError(line_no, "duplicate edge " + std::string(tokens[0]) + " " +
                                      std::string(tokens[1]));
      }
    }
    if (end == text.size()) break;
  }

  std::vector<Vertex> vertices(labels->size());
  for (Vertex i = 0; i < vertices.size(); ++i) vertices[i] = i;
  return Graph(std::move(vertices), std::move(edges), std::move(labels));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (Vertex x : g.vertices()) out << "v " << g.label(x) << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Clique counting

CliqueVector clique_vector(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CliqueVector out;
  out.kappa.push_back(n);
  if (n == 0) return out;

  // Degeneracy order by repeated removal of a minimum-degree vertex.
  auto vs = g.vertices();
  std::unordered_map<Vertex, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[vs[i]] = i;
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(vs[i]);
  std::vector<std::size_t> rank(n);
  std::vector<char> removed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!removed[i] && (best == n || deg[i] < deg[best])) best = i;
    }
    removed[best] = 1;
    rank[best] = step;
    for (Vertex y : g.neighbors(vs[best])) {
      std::size_t j = local[y];
      if (!removed[j]) --deg[j];
    }
  }

  // Forward adjacency in rank space, sorted.
  std::vector<std::vector<std::size_t>> forward(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex y : g.neighbors(vs[i])) {
      std::size_t j = local[y];
      if (rank[j] > rank[i]) forward[rank[i]].push_back(rank[j]);
    }
    std::sort(forward[rank[i]].begin(), forward[rank[i]].end());
  }

  std::function<void(const std::vector<std::size_t>&, std::size_t)> extend =
      [&](const std::vector<std::size_t>& candidates, std::size_t size) {
        for (std::size_t c : candidates) {
          if (out.kappa.size() <= size) out.kappa.push_back(0);
          ++out.kappa[size];
          std::vector<std::size_t> next;
          std::set_intersection(candidates.begin(), candidates.end(), forward[c].begin(),
                                forward[c].end(), std::back_inserter(next));
          if (!next.empty()) extend(next, size + 1);
        }
      };
  for (std::size_t r = 0; r < n; ++r) extend(forward[r], 1);

  while (out.kappa.size() > 1 && out.kappa.back() == 0) out.kappa.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// Chordality

namespace {

std::vector<Vertex> lex_bfs(const Graph& g) {
  auto vs = g.vertices();
  const std::size_t n = vs.size();
  std::unordered_map<Vertex, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[vs[i]] = i;
  std::vector<std::vector<std::size_t>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (visited[i]) continue;
      if (best == n || label[i] > label[best]) best = i;
    }
    visited[best] = 1;
    order.push_back(vs[best]);
    for (Vertex y : g.neighbors(vs[best])) {
      std::size_t j = local[y];
      if (!visited[j]) label[j].push_back(n - step);
    }
  }
  return order;
}

// Chordless cycle through x, u, ..., w where u, w are non-adjacent
// neighbors of x: a shortest u-w path avoiding the rest of N[x].
std::vector<Vertex> find_chordless_cycle(const Graph& g) {
  for (Vertex x : g.vertices()) {
    auto nx = g.neighbors(x);
    for (std::size_t a = 0; a < nx.size(); ++a) {
      for (std::size_t b = a + 1; b < nx.size(); ++b) {
        Vertex u = nx[a], w = nx[b];
        if (g.has_edge(u, w)) continue;
        std::unordered_map<Vertex, Vertex> parent;
        auto blocked = [&](Vertex y) {
          return y == x || (y != u && y != w && std::binary_search(nx.begin(), nx.end(), y));
        };
        std::deque<Vertex> queue{u};
        parent[u] = u;
        while (!queue.empty() && !parent.count(w)) {
          Vertex y = queue.front();
          queue.pop_front();
          for (Vertex z : g.neighbors(y)) {
            if (blocked(z) || parent.count(z)) continue;
            parent[z] = y;
            queue.push_back(z);
          }
        }
        if (!parent.count(w)) continue;
        std::vector<Vertex> path;
        for (Vertex y = w; y != u; y = parent[y]) path.push_back(y);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        std::vector<Vertex> cycle{x};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  ChordalityResult result;
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  std::unordered_map<Vertex, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  bool ok = true;
  for (Vertex x : order) {
    std::vector<Vertex> later;
    for (Vertex y : g.neighbors(x)) {
      if (position[y] > position[x]) later.push_back(y);
    }
    if (later.empty()) continue;
    Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
      return position[a] < position[b];
    });
    for (Vertex y : later) {
      if (y != parent && !g.has_edge(parent, y)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  result.chordal = ok;
  result.elimination_order = std::move(order);
  if (!ok) {
    result.chordless_cycle = find_chordless_cycle(g);
    assert(result.chordless_cycle.size() >= 4);
  }
  return result;
}

bool is_triangle_complete(const Graph& g, const Graph& k) {
  if (!k.edges_within(g)) throw GraphError("triangle-completeness: k is not a subgraph of g");
  for (const auto& t : g.triangles()) {
    int inside = static_cast<int>(k.has_edge(t[0], t[1])) + k.has_edge(t[0], t[2]) +
                 k.has_edge(t[1], t[2]);
    if (inside == 2) return false;
  }
  return true;
}

VertexSplit split_at_vertex(const Graph& g, Vertex pivot) {
  if (!g.has_vertex(pivot)) {
    throw GraphError("split_at_vertex: vertex " + std::to_string(pivot) + " is not in the graph");
  }
  auto nbrs = g.neighbors(pivot);
  std::vector<Vertex> closed(nbrs.begin(), nbrs.end());
  closed.push_back(pivot);
  VertexSplit out{g.without_vertex(pivot), g.induced(closed), g.induced(nbrs)};
  assert(is_triangle_complete(out.rest, out.seam));
  assert(is_triangle_complete(out.star, out.seam));
  assert(is_triangle_complete(g, out.rest));
  assert(is_triangle_complete(g, out.star));
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition

DecompositionTree DecompositionTree::leaf(Graph g, LeafReason reason) {
  DecompositionTree t;
  t.graph_ = std::move(g);
  t.reason_ = reason;
  return t;
}

DecompositionTree DecompositionTree::node(Graph g, std::optional<Vertex> pivot,
                                          DecompositionTree left, DecompositionTree right,
                                          Graph seam) {
  DecompositionTree t;
  t.graph_ = std::move(g);
  t.pivot_ = pivot;
  t.left_ = std::make_shared<const DecompositionTree>(std::move(left));
  t.right_ = std::make_shared<const DecompositionTree>(std::move(right));
  t.seam_ = std::move(seam);
  return t;
}

std::vector<const DecompositionTree*> DecompositionTree::leaves() const {
  if (is_leaf()) return {this};
  auto out = left_->leaves();
  auto more = right_->leaves();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::size_t DecompositionTree::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left_->depth(), right_->depth());
}

namespace {

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!g.has_edge(vs[a], vs[b])) return false;
    }
  }
  return true;
}

Vertex choose_pivot(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::optional<Vertex> simplicial;
  std::optional<Vertex> min_degree;
  for (Vertex x : g.vertices()) {
    const std::size_t d = g.degree(x);
    if (d + 1 >= n) continue;  // closed neighborhood is everything
    if (!min_degree || d < g.degree(*min_degree)) min_degree = x;
    if (is_clique(g, g.neighbors(x)) && (!simplicial || d < g.degree(*simplicial))) {
      simplicial = x;
    }
  }
  assert(min_degree.has_value());
  return simplicial ? *simplicial : *min_degree;
}

}  // namespace

DecompositionTree decompose(const Graph& g) {
  if (g.num_vertices() <= 1) {
    return DecompositionTree::leaf(g, DecompositionTree::LeafReason::single_component_base);
  }
  if (g.is_complete()) {
    return DecompositionTree::leaf(g, DecompositionTree::LeafReason::complete_graph);
  }
  auto components = g.connected_components();
  if (components.size() > 1) {
    std::vector<Vertex> others;
    for (std::size_t i = 1; i < components.size(); ++i) {
      others.insert(others.end(), components[i].begin(), components[i].end());
    }
    Graph empty_seam({}, {}, g.label_table());
    return DecompositionTree::node(g, std::nullopt, decompose(g.induced(components[0])),
                                   decompose(g.induced(others)), std::move(empty_seam));
  }
  const Vertex pivot = choose_pivot(g);
  auto split = split_at_vertex(g, pivot);
  return DecompositionTree::node(g, pivot, decompose(split.rest), decompose(split.star),
                                 std::move(split.seam));
}

std::string_view to_string(DecompositionTree::LeafReason reason) {
  switch (reason) {
    case DecompositionTree::LeafReason::complete_graph:
      return "complete-graph";
    case DecompositionTree::LeafReason::single_component_base:
      return "single-component-base";
  }
  return "unknown";
}

}  // namespace glcs
