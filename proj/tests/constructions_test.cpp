#include <gtest/gtest.h>

#include <set>

#include "fauxtree/constructions.hpp"
#include "fauxtree/enumerate.hpp"
#include "fauxtree/spectra.hpp"

using namespace fauxtree;

namespace {

constexpr auto A = MatrixKind::Adjacency;
constexpr auto Q = MatrixKind::SignlessLaplacian;
constexpr auto NA = MatrixKind::NormalizedAdjacency;

Graph triangle() { return cycle_graph(3); }

}  // namespace

TEST(LimbPair, DefiningProperties) {
  const LimbPair& lp = limb_pair();
  EXPECT_TRUE(is_tree(lp.t1.graph));
  EXPECT_FALSE(is_tree(lp.t2.graph));
  EXPECT_TRUE(cospectral(lp.t1.graph, lp.t2.graph, A));
  const Graph r1 = lp.t1.graph.without_vertex(lp.t1.root);
  const Graph r2 = lp.t2.graph.without_vertex(lp.t2.root);
  EXPECT_TRUE(cospectral(r1, r2, A));
  const Graph p5_k1 = disjoint_union(path_graph(5), Graph(1));
  EXPECT_TRUE(isomorphic(r1, p5_k1));
  EXPECT_TRUE(isomorphic(r2, p5_k1));
  EXPECT_TRUE(isomorphic(lp.t2.graph, disjoint_union(cycle_graph(6), Graph(1))));
  EXPECT_EQ(degree(lp.t1.graph, lp.t1.root), 2);
}

TEST(LimbSearch, Occurrences) {
  const LimbPair& lp = limb_pair();
  EXPECT_FALSE(limb_occurrences(lp.t1.graph, lp.t1).empty());
  EXPECT_TRUE(limb_occurrences(path_graph(3), lp.t1).empty());
  EXPECT_THROW(limb_occurrences(triangle(), lp.t1), GraphError);
  // t1 hung off the end of P4
  const Graph s = coalesce(RootedGraph(path_graph(4), 0), lp.t1);
  bool at_join = false;
  for (const LimbSite& site : limb_occurrences(s, lp.t1)) at_join = at_join || site.vertex == 0;
  EXPECT_TRUE(at_join);
}

TEST(LimbSearch, SitesMapTheLimb) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const Graph s = random_limb_host(13, rng);
    for (const LimbSite& site : limb_occurrences(s, limb_pair().t1)) {
      for (auto [u, v] : limb_pair().t1.graph.edges()) EXPECT_TRUE(s.adjacent(site.map[u], site.map[v]));
    }
  }
}

TEST(LimbSwap, Examples) {
  const LimbPair& lp = limb_pair();
  const auto sites = limb_occurrences(lp.t1.graph, lp.t1);
  const LimbSwap swapped = limb_swap(lp.t1.graph, sites.front());
  EXPECT_TRUE(isomorphic(swapped.graph, lp.t2.graph));

  const Graph s = coalesce(lp.t1, RootedGraph(path_graph(2), 0));
  const LimbSwap grown = limb_swap(s, limb_occurrences(s, lp.t1).front());
  EXPECT_EQ(grown.graph.order(), 8);
  EXPECT_TRUE(cospectral(s, grown.graph, A));
  EXPECT_FALSE(is_tree(grown.graph));
}

TEST(LimbSwap, IsAnInvolution) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Graph s = random_limb_host(13, rng);
    const auto sites = limb_occurrences(s, limb_pair().t1);
    ASSERT_FALSE(sites.empty());
    const LimbSwap there = limb_swap(s, sites.front());
    const LimbSwap back = replace_limb(there.graph, there.site, limb_pair().t2, limb_pair().t1);
    EXPECT_TRUE(isomorphic(back.graph, s));
  }
}

TEST(LimbSwap, RejectsBadSites) {
  const LimbPair& lp = limb_pair();
  LimbSite bogus{0, {0, 1, 2, 3, 4, 5, 6}};
  EXPECT_THROW(limb_swap(lp.t1.graph, bogus), GraphError);
  LimbSite shortsite{1, {1}};
  EXPECT_THROW(limb_swap(lp.t1.graph, shortsite), GraphError);
}

TEST(LimbSwap, RandomHostsStayCospectral) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Graph s = random_limb_host(13, rng);
    ASSERT_TRUE(is_tree(s));
    ASSERT_LE(s.order(), 13);
    for (const LimbSite& site : limb_occurrences(s, limb_pair().t1)) {
      const Graph swapped = limb_swap(s, site).graph;
      EXPECT_TRUE(cospectral(s, swapped, A));
      EXPECT_FALSE(is_tree(swapped));
    }
  }
}

TEST(RandomTree, IsTree) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 20; ++n) EXPECT_TRUE(is_tree(random_tree(n, rng)));
}

TEST(QFamily, BasePair) {
  const auto [non_tree, tree] = q_base_pair();
  EXPECT_FALSE(is_tree(non_tree));
  EXPECT_TRUE(is_tree(tree));
  EXPECT_EQ(non_tree.edge_count(), 3);
  EXPECT_EQ(tree.edge_count(), 3);
  RatPoly roots = RatPoly::linear_root(mpq_class(4)) * RatPoly::linear_root(mpq_class(1)) *
                  RatPoly::linear_root(mpq_class(1)) * RatPoly::x();
  EXPECT_EQ(char_poly(non_tree, Q).charpoly, roots);
  EXPECT_EQ(char_poly(tree, Q).charpoly, roots);
}

TEST(QFamily, Attach) {
  const auto [a, b] = q_attach(RootedGraph(star_graph(3), 0));
  EXPECT_EQ(a.order(), 16);
  EXPECT_TRUE(cospectral(a, b, Q));
  EXPECT_TRUE(is_tree(b));
  EXPECT_FALSE(is_tree(a));

  const auto [c, d] = q_attach(RootedGraph(Graph(1), 0));
  EXPECT_EQ(c, q_base_pair().first);
  EXPECT_EQ(d, q_base_pair().second);

  const auto [e, f] = q_attach(RootedGraph(path_graph(2), 0));
  EXPECT_EQ(e.order(), 8);
  EXPECT_TRUE(cospectral(e, f, Q));

  const auto [g, h] = q_attach(RootedGraph(path_graph(3), 0));
  EXPECT_EQ(g.order(), 12);
  EXPECT_TRUE(cospectral(g, h, Q));
}

TEST(QFamily, EveryRootedTreeUpToFive) {
  for (int k = 1; k <= 5; ++k)
    for (const Graph& t : free_trees(k))
      for (int r = 0; r < k; ++r) {
        const auto [a, b] = q_attach(RootedGraph(t, r));
        EXPECT_EQ(a.order(), 4 * k);
        EXPECT_TRUE(cospectral(a, b, Q));
        EXPECT_TRUE(is_tree(b));
        EXPECT_FALSE(is_tree(a));
      }
}

TEST(Ornament, Examples) {
  EXPECT_TRUE(isomorphic(build_ornamented(parse_word("ie"), 1, 2).graph, path_graph(3)));
  const Graph c4 = build_ornamented(parse_word("ie"), 2, 2).graph;
  const Graph k13 = build_ornamented(parse_word("ie"), 1, 3).graph;
  EXPECT_TRUE(isomorphic(c4, cycle_graph(4)));
  EXPECT_TRUE(isomorphic(k13, star_graph(3)));
  EXPECT_TRUE(cospectral(c4, k13, NA));
}

TEST(Ornament, BranchingExample) {
  const ExtendedWord w = parse_word("iSSD((e)*(Se))");
  std::vector<Graph> gs;
  for (auto [p, q] : {std::pair{1, 4}, {2, 3}, {3, 2}}) {
    const Ornament o = build_ornamented(w, p, q);
    EXPECT_EQ(o.graph.order(), 25);
    EXPECT_EQ(o.blocks.size(), 6u);
    EXPECT_NO_THROW(validate_blocks(o.graph, o.blocks));
    EXPECT_EQ(is_tree(o.graph), p == 1);
    gs.push_back(o.graph);
  }
  EXPECT_TRUE(cospectral(gs[0], gs[1], NA));
  EXPECT_TRUE(cospectral(gs[1], gs[2], NA));
}

TEST(Ornament, FamilyProperties) {
  for (int letters = 1; letters <= 4; ++letters) {
    for (const WordTree& w : all_words(letters)) {
      const ExtendedWord ew{w};
      for (int c = 4; c <= 8; ++c) {
        const Graph base = build_ornamented(ew, 1, c - 1).graph;
        EXPECT_TRUE(is_tree(base));
        EXPECT_EQ(base.order(), 1 + letters * (c - 1));
        for (int p = 2; p <= c - 2; ++p) {
          const Graph g = build_ornamented(ew, p, c - p).graph;
          EXPECT_FALSE(is_tree(g));
          EXPECT_TRUE(cospectral(base, g, NA));
        }
      }
    }
  }
}

TEST(Ornament, DistinctTreesGiveDistinctNonTrees) {
  for (int alpha : {4, 5}) {
    std::set<Graph> trees, ornaments;
    for (int letters = 1; letters <= 4; ++letters)
      for (const WordTree& w : all_words(letters)) {
        const ExtendedWord ew{w};
        const Graph shape = canonical_graph(tree_of_word(ew).graph);
        const Graph g = canonical_graph(build_ornamented(ew, 2, alpha - 1).graph);
        // contains a 4-cycle: two vertices with two common neighbours
        bool square = false;
        for (int u = 0; u < g.order(); ++u)
          for (int v = u + 1; v < g.order(); ++v) square = square || std::popcount(g.neighbors(u) & g.neighbors(v)) >= 2;
        EXPECT_TRUE(square);
        if (trees.insert(shape).second) {
          EXPECT_TRUE(ornaments.insert(g).second);
        }
      }
    EXPECT_EQ(trees.size(), ornaments.size());
  }
}

TEST(Ornament, Rejects) {
  EXPECT_THROW(build_ornamented(parse_word("ie"), 0, 3), GraphError);
  EXPECT_THROW(build_ornamented(parse_word("ie"), 1, 1), GraphError);
  EXPECT_THROW(build_ornamented(parse_word("iSSSSSe"), 3, 4), GraphError);  // 37 vertices
}

TEST(KaryPair, Properties) {
  const auto [tree, other] = kary_example_pair();
  EXPECT_EQ(tree.order(), 17);
  EXPECT_EQ(other.order(), 17);
  EXPECT_TRUE(is_tree(tree));
  EXPECT_FALSE(is_tree(other));
  EXPECT_TRUE(cospectral(tree, other, NA));
  EXPECT_FALSE(cospectral(tree, other, A));
}
