#pragma once

#include <random>
#include <vector>

#include "fauxtree/cycle_decomp.hpp"
#include "fauxtree/graph.hpp"
#include "fauxtree/word.hpp"

namespace fauxtree {

/// The rooted pair used for limb swapping. Vertices 0..6 are A..G.
/// t1: spider with centre G and legs G-B-C, G-F-E, G-A-D, rooted at B.
/// t2: the 6-cycle B-C-D-E-F-G plus the isolated vertex A, rooted at B.
/// Deleting the root leaves P5 plus an isolated vertex in both.
struct LimbPair {
  RootedGraph t1;
  RootedGraph t2;
};

const LimbPair& limb_pair();

/// Where a rooted limb sits in a host graph: `map[x]` is the host vertex
/// playing limb vertex x, and `vertex` is the image of the limb root.
struct LimbSite {
  int vertex = 0;
  std::vector<int> map;
  friend bool operator==(const LimbSite&, const LimbSite&) = default;
};

/// Every way the tree `s` splits as `limb` coalesced at some vertex onto the
/// rest. `limb` must be a tree; sites are found by matching rooted subtree
/// codes of the branches at each vertex.
std::vector<LimbSite> limb_occurrences(const Graph& s, const RootedGraph& limb);

struct LimbSwap {
  Graph graph;
  LimbSite site;  ///< where `to` now sits
};

/// Cuts the copy of `from` at `site` out of `g` and coalesces `to` in its
/// place. The remaining host keeps its vertex order; the new limb's
/// non-root vertices are appended. Throws GraphError if `site` does not
/// describe an induced copy of `from` attached only through its root.
LimbSwap replace_limb(const Graph& g, const LimbSite& site, const RootedGraph& from,
                      const RootedGraph& to);

/// Swaps t1 for t2 at a site of the tree `s`.
LimbSwap limb_swap(const Graph& s, const LimbSite& site);

/// Uniform labelled random tree on n vertices (Pruefer decoding).
Graph random_tree(int n, std::mt19937_64& rng);

/// A random tree on at most `max_vertices` vertices containing t1 as a limb:
/// a random host tree with t1 coalesced at a random vertex.
Graph random_limb_host(int max_vertices, std::mt19937_64& rng);

/// (triangle plus an isolated vertex, K_{1,3}); Q-cospectral.
std::pair<Graph, Graph> q_base_pair();

/// Both base-pair members with a copy of `rooted` coalesced at each of their
/// four vertices; same order as q_base_pair().
std::pair<Graph, Graph> q_attach(const RootedGraph& rooted);

/// A (p,q) ornamented tree together with its complete bipartite blocks.
struct Ornament {
  Graph graph;
  BlockSet blocks;
};

/// Blocks are laid out in word pre-order. For a letter at vertex v the
/// p-side is v plus p-1 new vertices and the q-side is the "+" child, the
/// "-" child and q-2 new vertices; new vertices are numbered p-side extras,
/// then "+", then "-", then q-side extras.
Ornament build_ornamented(const ExtendedWord& word, int p, int q);

/// The fixed 17-vertex pair from the ternary example: (tree, non-tree),
/// cospectral for the normalized adjacency.
std::pair<Graph, Graph> kary_example_pair();

}  // namespace fauxtree
