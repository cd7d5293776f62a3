#include "fauxtree/constructions.hpp"

#include <algorithm>
#include <functional>

namespace fauxtree {

// A=0 B=1 C=2 D=3 E=4 F=5 G=6
const LimbPair& limb_pair() {
  static const LimbPair pair{
      RootedGraph(Graph::from_edges(7, {{6, 1}, {1, 2}, {6, 5}, {5, 4}, {6, 0}, {0, 3}}), 1),
      RootedGraph(Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}), 1),
  };
  return pair;
}

// ---------------------------------------------------------------------------
// Limb search

namespace {

// Rooted canonical code of the branch at `v` hanging away from `parent`.
std::string branch_code(const Graph& g, int v, int parent) {
  std::vector<std::string> parts;
  VertexSet s = g.neighbors(v);
  while (s) {
    const int u = std::countr_zero(s);
    s &= s - 1;
    if (u != parent) parts.push_back(branch_code(g, u, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string code = "(";
  for (const auto& p : parts) code += p;
  return code + ")";
}

std::vector<std::pair<std::string, int>> coded_children(const Graph& g, int v, int parent) {
  std::vector<std::pair<std::string, int>> out;
  VertexSet s = g.neighbors(v);
  while (s) {
    const int u = std::countr_zero(s);
    s &= s - 1;
    if (u != parent) out.emplace_back(branch_code(g, u, v), u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pairs up two isomorphic rooted branches vertex by vertex.
void match_branch(const Graph& limb, int lx, int lp, const Graph& s, int sx, int sp,
                  std::vector<int>& map) {
  map[lx] = sx;
  const auto a = coded_children(limb, lx, lp);
  const auto b = coded_children(s, sx, sp);
  for (std::size_t i = 0; i < a.size(); ++i) match_branch(limb, a[i].second, lx, s, b[i].second, sx, map);
}

}  // namespace

std::vector<LimbSite> limb_occurrences(const Graph& s, const RootedGraph& limb) {
  if (!is_tree(s)) throw GraphError("limb_occurrences: host is not a tree");
  if (!is_tree(limb.graph)) throw GraphError("limb_occurrences: limb is not a tree");
  std::vector<LimbSite> out;
  if (limb.graph.order() > s.order()) return out;
  const auto want = coded_children(limb.graph, limb.root, -1);
  for (int v = 0; v < s.order(); ++v) {
    const auto have = coded_children(s, v, -1);
    std::vector<int> chosen(want.size(), -1);
    std::vector<bool> used(have.size(), false);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == want.size()) {
        LimbSite site{v, std::vector<int>(limb.graph.order(), -1)};
        site.map[limb.root] = v;
        for (std::size_t k = 0; k < want.size(); ++k) {
          match_branch(limb.graph, want[k].second, limb.root, s, have[chosen[k]].second, v, site.map);
        }
        out.push_back(std::move(site));
        return;
      }
      // equal codes are assigned in increasing order so each site appears once
      const int from = (i > 0 && want[i].first == want[i - 1].first) ? chosen[i - 1] + 1 : 0;
      for (int j = from; j < static_cast<int>(have.size()); ++j) {
        if (used[j] || have[j].first != want[i].first) continue;
        used[j] = true;
        chosen[i] = j;
        assign(i + 1);
        used[j] = false;
      }
    };
    assign(0);
  }
  return out;
}

LimbSwap replace_limb(const Graph& g, const LimbSite& site, const RootedGraph& from,
                      const RootedGraph& to) {
  const int k = from.graph.order();
  if (static_cast<int>(site.map.size()) != k) throw GraphError("limb site has the wrong size");
  if (site.map[from.root] != site.vertex) throw GraphError("limb site root mismatch");
  VertexSet image = 0;
  for (int x : site.map) {
    if (x < 0 || x >= g.order() || (image & vertex_bit(x))) {
      throw GraphError("limb site is not an injective map into the host");
    }
    image |= vertex_bit(x);
  }
  for (int x = 0; x < k; ++x) {
    VertexSet expect = 0;
    VertexSet s = from.graph.neighbors(x);
    while (s) {
      expect |= vertex_bit(site.map[std::countr_zero(s)]);
      s &= s - 1;
    }
    const VertexSet actual = g.neighbors(site.map[x]);
    const bool ok = (x == from.root) ? ((actual & image) == expect) : (actual == expect);
    if (!ok) throw GraphError("limb site does not match the limb in the host");
  }
  const VertexSet keep = g.vertices() & ~(image & ~vertex_bit(site.vertex));
  const Graph host = g.induced(keep);
  const int host_root = std::popcount(keep & (vertex_bit(site.vertex) - 1));

  LimbSwap out{coalesce(RootedGraph(host, host_root), to), {host_root, {}}};
  int next = host.order();
  for (int x = 0; x < to.graph.order(); ++x) out.site.map.push_back(x == to.root ? host_root : next++);
  return out;
}

LimbSwap limb_swap(const Graph& s, const LimbSite& site) {
  if (!is_tree(s)) throw GraphError("limb_swap: host is not a tree");
  return replace_limb(s, site, limb_pair().t1, limb_pair().t2);
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxVertices) throw GraphError("random_tree: bad order");
  if (n == 1) return Graph(1);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];
  std::vector<Graph::Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --deg[leaf];
    --deg[c];
  }
  int u = -1, v = -1;
  for (int x = 0; x < n; ++x) {
    if (deg[x] != 1) continue;
    (u < 0 ? u : v) = x;
  }
  edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_limb_host(int max_vertices, std::mt19937_64& rng) {
  const int limb = limb_pair().t1.graph.order();
  if (max_vertices < limb) throw GraphError("random_limb_host: too few vertices");
  std::uniform_int_distribution<int> size(1, max_vertices - limb + 1);
  const Graph host = random_tree(size(rng), rng);
  std::uniform_int_distribution<int> at(0, host.order() - 1);
  return coalesce(RootedGraph(host, at(rng)), limb_pair().t1);
}

// ---------------------------------------------------------------------------
// Signless Laplacian family

std::pair<Graph, Graph> q_base_pair() {
  return {Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}}), star_graph(3)};
}

std::pair<Graph, Graph> q_attach(const RootedGraph& rooted) {
  auto [a, b] = q_base_pair();
  for (int v = 0; v < 4; ++v) {
    a = coalesce(RootedGraph(a, v), rooted);
    b = coalesce(RootedGraph(b, v), rooted);
  }
  return {a, b};
}

// ---------------------------------------------------------------------------
// Ornaments

Ornament build_ornamented(const ExtendedWord& word, int p, int q) {
  if (p < 1 || q < 2) throw GraphError("ornament needs p >= 1 and q >= 2");
  const int n = 1 + word.body.letters() * (p + q - 1);
  if (n > kMaxVertices) throw GraphError("ornament exceeds " + std::to_string(kMaxVertices) + " vertices");
  Ornament out;
  std::vector<Graph::Edge> edges;
  int next = 1;
  std::function<void(const WordTree&, int)> grow = [&](const WordTree& node, int v) {
    Block block;
    block.p_side = vertex_bit(v);
    for (int i = 1; i < p; ++i) block.p_side |= vertex_bit(next++);
    const int plus = next++, minus = next++;
    block.q_side = vertex_bit(plus) | vertex_bit(minus);
    for (int i = 2; i < q; ++i) block.q_side |= vertex_bit(next++);
    for (VertexSet a = block.p_side; a; a &= a - 1)
      for (VertexSet b = block.q_side; b; b &= b - 1)
        edges.emplace_back(std::countr_zero(a), std::countr_zero(b));
    out.blocks.push_back(block);
    switch (node.kind()) {
      case WordTree::Kind::End: break;
      case WordTree::Kind::Single: grow(node.children()[0], minus); break;
      case WordTree::Kind::Double:
        grow(node.children()[0], plus);
        grow(node.children()[1], minus);
        break;
    }
  };
  grow(word.body, 0);
  out.graph = Graph::from_edges(n, edges);
  return out;
}

// A=0 B=1 C=2 D=3, B1..B3=4..6, C1..C3=7..9, D1..D3=10..12, AA=13 BB=14 CC=15 DD=16
std::pair<Graph, Graph> kary_example_pair() {
  std::vector<Graph::Edge> common{{0, 1}, {0, 2}, {0, 3}};
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < 3; ++i) common.emplace_back(1 + b, 4 + 3 * b + i);
  std::vector<Graph::Edge> tree = common, other = common;
  for (int b = 0; b < 4; ++b) tree.emplace_back(13 + b, b);
  for (int b = 1; b < 4; ++b) {
    other.emplace_back(13, b);
    for (int i = 0; i < 3; ++i) other.emplace_back(13 + b, 4 + 3 * (b - 1) + i);
  }
  return {Graph::from_edges(17, tree), Graph::from_edges(17, other)};
}

}  // namespace fauxtree
