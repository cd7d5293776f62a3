#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fauxtree {

inline constexpr int kMaxVertices = 32;

/// One bit per vertex; bit v set means vertex v is in the set.
using VertexSet = std::uint32_t;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (vertex_bit(n) - 1);
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on at most 32 vertices.
///
/// Adjacency is stored as one 32-bit row per vertex. Values are immutable
/// once built; every operation that changes structure returns a new graph.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from raw adjacency rows; rows must already be symmetric and loop-free.
  static Graph from_rows(int n, std::span<const VertexSet> rows);

  int order() const { return n_; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet vertices() const { return first_vertices(n_); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Graph on `order() + 1` vertices; the new vertex is adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;
  /// Subgraph induced by `keep`, relabelled 0..k-1 preserving vertex order.
  Graph induced(VertexSet keep) const;
  Graph without_vertex(int v) const { return induced(vertices() & ~vertex_bit(v)); }
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  const std::array<VertexSet, kMaxVertices>& rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;
  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

struct RootedGraph {
  Graph graph;
  int root = 0;

  RootedGraph() = default;
  RootedGraph(Graph g, int r);
};

inline int degree(const Graph& g, int v) { return std::popcount(g.neighbors(v)); }
int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// Two-colouring (colour of each vertex, 0 or 1) when the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }
bool is_odd_unicyclic(const Graph& g);
/// Breadth-first distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Vertices of `a` keep their labels; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Identifies the root of `g` with the root of `h`.
///
/// Vertices of `h` keep their labels, the non-root vertices of `g` follow in
/// their original order. The identified vertex is h.root.
Graph coalesce(const RootedGraph& h, const RootedGraph& g);

// Common small graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

// ---------------------------------------------------------------------------
// Canonical labelling

/// Canonical certificate: the graph6 text of the canonically relabelled graph.
struct CanonicalCert {
  std::string bytes;
  friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
  friend auto operator<=>(const CanonicalCert&, const CanonicalCert&) = default;
};

struct CanonicalLabeling {
  Graph graph;             ///< canonical representative
  std::vector<int> label;  ///< vertex v of the input is vertex label[v] of `graph`
  /// Automorphism generators discovered during the search (as vertex maps).
  std::vector<std::vector<int>> automorphisms;
};

CanonicalLabeling canonical_labeling(const Graph& g);
inline Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }
std::pair<CanonicalCert, std::vector<int>> canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// graph6

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

}  // namespace fauxtree
