#include "fauxtree/graph.hpp"

#include <algorithm>
#include <string>

namespace fauxtree {
namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0..32");
  }
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.adj_[u] |= vertex_bit(v);
    g.adj_[v] |= vertex_bit(u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const VertexSet> rows) {
  Graph g(n);
  if (static_cast<int>(rows.size()) < n) throw GraphError("too few adjacency rows");
  const VertexSet all = first_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw GraphError("adjacency row has bits beyond order");
    if (rows[v] & vertex_bit(v)) throw GraphError("loop in adjacency rows");
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) throw GraphError("asymmetric adjacency rows");
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] & ~first_vertices(u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.adj_[u] |= vertex_bit(v);
  g.adj_[v] |= vertex_bit(u);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(n_, u);
  check_vertex(n_, v);
  Graph g = *this;
  g.adj_[u] &= ~vertex_bit(v);
  g.adj_[v] &= ~vertex_bit(u);
  return g;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ >= kMaxVertices) throw GraphError("graph already has 32 vertices");
  if (nbrs & ~vertices()) throw GraphError("neighbour set outside vertex range");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.adj_[n_] = nbrs;
  VertexSet s = nbrs;
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    g.adj_[v] |= vertex_bit(n_);
  }
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> pos{};
  int k = 0;
  for (int v = 0; v < n_; ++v) {
    if (keep & vertex_bit(v)) pos[v] = k++;
  }
  Graph g(k);
  for (int v = 0; v < n_; ++v) {
    if (!(keep & vertex_bit(v))) continue;
    VertexSet s = adj_[v] & keep;
    VertexSet row = 0;
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      row |= vertex_bit(pos[u]);
    }
    g.adj_[pos[v]] = row;
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    check_vertex(n_, p);
    seen |= vertex_bit(p);
  }
  if (seen != vertices()) throw GraphError("relabelling is not a permutation");
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet s = adj_[v];
    VertexSet row = 0;
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      row |= vertex_bit(perm[u]);
    }
    g.adj_[perm[v]] = row;
  }
  return g;
}

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
  check_vertex(graph.order(), root);
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, degree(g, v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, degree(g, v));
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left) {
    VertexSet comp = vertex_bit(std::countr_zero(left));
    VertexSet frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      VertexSet fresh = g.neighbors(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (VertexSet comp : components(g)) {
    int start = std::countr_zero(comp);
    colour[start] = 0;
    std::vector<int> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      VertexSet s = g.neighbors(v);
      while (s) {
        int u = std::countr_zero(s);
        s &= s - 1;
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          queue.push_back(u);
        } else if (colour[u] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_odd_unicyclic(const Graph& g) {
  // A connected graph with n edges has exactly one cycle; it is odd iff the
  // graph is not bipartite.
  return g.order() >= 3 && g.edge_count() == g.order() && is_connected(g) && !is_bipartite(g);
}

std::vector<int> distances_from(const Graph& g, int source) {
  check_vertex(g.order(), source);
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::vector<int> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    VertexSet s = g.neighbors(v);
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  check_order(n);
  std::array<VertexSet, kMaxVertices> rows{};
  for (int v = 0; v < a.order(); ++v) rows[v] = a.neighbors(v);
  for (int v = 0; v < b.order(); ++v) rows[a.order() + v] = b.neighbors(v) << a.order();
  return Graph::from_rows(n, std::span(rows.data(), n));
}

Graph coalesce(const RootedGraph& h, const RootedGraph& g) {
  const int n = h.graph.order() + g.graph.order() - 1;
  check_order(n);
  // New label of each vertex of g.
  std::vector<int> map(g.graph.order());
  int next = h.graph.order();
  for (int v = 0; v < g.graph.order(); ++v) map[v] = (v == g.root) ? h.root : next++;
  std::vector<Graph::Edge> edges = h.graph.edges();
  for (auto [u, v] : g.graph.edges()) edges.emplace_back(map[u], map[v]);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Graph::Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<Graph::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Graph::Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Graph::Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

}  // namespace fauxtree
