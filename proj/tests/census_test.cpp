#include <gtest/gtest.h>

#include "fauxtree/census.hpp"

using namespace fauxtree;

namespace {

std::pair<long, long> run(int n, MatrixKind kind, CensusMode mode = CensusMode::Brute, bool prune = true) {
  CensusOptions o;
  o.n = n;
  o.kind = kind;
  o.mode = mode;
  o.prune = prune;
  const CensusTable t = census(o);
  EXPECT_EQ(t.recount(), std::make_pair(t.faux_tree_count, t.trees_with_mate_count));
  return {t.faux_tree_count, t.trees_with_mate_count};
}

using P = std::pair<long, long>;
constexpr auto A = MatrixKind::Adjacency;
constexpr auto L = MatrixKind::Laplacian;
constexpr auto Q = MatrixKind::SignlessLaplacian;
constexpr auto NA = MatrixKind::NormalizedAdjacency;

}  // namespace

TEST(Census, Examples) {
  EXPECT_EQ(run(7, A), P(6, 6));
  EXPECT_EQ(run(4, L), P(0, 0));
  EXPECT_EQ(run(8, NA), P(3, 1));
  EXPECT_EQ(run(12, Q, CensusMode::Structured), P(9, 9));
}

TEST(Census, AdjacencySmall) {
  const std::vector<P> want{{0, 0}, {1, 1}, {1, 1}, {6, 6}, {5, 5}};
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(run(n, A), want[n - 4]) << n;
}

TEST(Census, NoLaplacianFauxTrees) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(run(n, L).first, 0) << n;
}

TEST(Census, PruningIsSound) {
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(run(n, A, CensusMode::Brute, true), run(n, A, CensusMode::Brute, false)) << n;
    EXPECT_EQ(run(n, NA, CensusMode::Brute, true), run(n, NA, CensusMode::Brute, false)) << n;
  }
}

TEST(Census, StructuredMatchesBrute) {
  for (int n : {4, 8}) EXPECT_EQ(run(n, Q, CensusMode::Structured), run(n, Q)) << n;
}

TEST(Census, QFauxTreesHaveTheTreePlusOddUnicyclicShape) {
  for (int n : {4, 8}) {
    CensusOptions o;
    o.n = n;
    o.kind = Q;
    for (const auto& c : census(o).classes) {
      for (const Graph& g : c.non_trees) {
        int trees = 0, odd = 0;
        const auto parts = components(g);
        for (VertexSet s : parts) {
          trees += is_tree(g.induced(s));
          odd += is_odd_unicyclic(g.induced(s));
        }
        EXPECT_EQ(trees, 1);
        EXPECT_EQ(odd + 1, static_cast<int>(parts.size()));
      }
    }
  }
}

TEST(Census, ClassesAreConsistent) {
  CensusOptions o;
  o.n = 7;
  o.kind = A;
  const CensusTable t = census(o);
  for (const auto& c : t.classes) {
    ASSERT_FALSE(c.trees.empty());
    for (const Graph& g : c.trees) EXPECT_EQ(spectral_key(char_poly(g, A).charpoly), c.key);
    for (const Graph& g : c.non_trees) {
      EXPECT_FALSE(is_tree(g));
      EXPECT_EQ(spectral_key(char_poly(g, A).charpoly), c.key);
    }
  }
}

TEST(Census, RejectsUnsupported) {
  CensusOptions o;
  o.n = 11;
  EXPECT_THROW(census(o), CensusError);
  o.n = 8;
  o.mode = CensusMode::Structured;
  o.kind = L;
  EXPECT_THROW(census(o), CensusError);
  o.kind = Q;
  o.n = 6;
  EXPECT_EQ(census(o).faux_tree_count, 0);
}

TEST(Census, Csv) {
  CensusOptions o;
  o.n = 8;
  o.kind = NA;
  EXPECT_EQ(census_csv_header(), "n,kind,trees,faux_trees,trees_with_mate");
  EXPECT_EQ(census_csv_row(census(o)), "8,NA,23,3,1");
}

TEST(Census, ThreadsGiveTheSameCounts) {
  CensusOptions o;
  o.n = 8;
  o.kind = NA;
  const CensusTable one = census(o);
  o.threads = 3;
  const CensusTable three = census(o);
  ASSERT_EQ(one.classes.size(), three.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) {
    EXPECT_EQ(one.classes[i].key, three.classes[i].key);
    EXPECT_EQ(one.classes[i].non_trees, three.classes[i].non_trees);
  }
}
