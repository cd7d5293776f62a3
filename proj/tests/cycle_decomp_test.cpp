#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fauxtree/algebra.hpp"
#include "fauxtree/constructions.hpp"
#include "fauxtree/cycle_decomp.hpp"
#include "fauxtree/enumerate.hpp"
#include "fauxtree/spectra.hpp"

using namespace fauxtree;

namespace {

RatPoly poly(std::initializer_list<long> lo_to_hi) {
  std::vector<mpq_class> c;
  for (long v : lo_to_hi) c.emplace_back(v);
  return RatPoly(c);
}

}  // namespace

TEST(Decompositions, Counts) {
  EXPECT_EQ(enumerate_decompositions(path_graph(2)).size(), 2u);
  EXPECT_EQ(enumerate_decompositions(cycle_graph(3)).size(), 5u);
  EXPECT_EQ(enumerate_decompositions(path_graph(3)).size(), 3u);
  // C4: empty, 4 edges, 2 perfect matchings, the 4-cycle
  EXPECT_EQ(enumerate_decompositions(cycle_graph(4)).size(), 8u);
  // K4: 1 + 6 + 3 matchings + 4 triangles + 3 four-cycles
  EXPECT_EQ(enumerate_decompositions(complete_graph(4)).size(), 17u);
}

TEST(Decompositions, PartsAreDisjointAndValid) {
  const Graph g = complete_graph(5);
  for (const auto& c : enumerate_decompositions(g)) {
    VertexSet seen = 0;
    for (const auto& part : c.parts) {
      for (std::size_t i = 0; i < part.size(); ++i) {
        ASSERT_FALSE(seen & vertex_bit(part[i]));
        seen |= vertex_bit(part[i]);
        if (part.size() >= 3 || i == 0) {
          ASSERT_TRUE(g.adjacent(part[i], part[(i + 1) % part.size()]));
        }
      }
    }
    EXPECT_EQ(c.unused, 5 - std::popcount(seen));
    EXPECT_LE(c.long_cycles(), c.cycle_count());
  }
}

TEST(Decompositions, NoDuplicates) {
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& c : enumerate_decompositions(complete_graph(5))) {
    auto parts = c.parts;
    std::sort(parts.begin(), parts.end());
    EXPECT_TRUE(seen.insert(parts).second);
  }
}

TEST(NormalizedByDecomposition, Examples) {
  EXPECT_EQ(na_charpoly_by_decomposition(path_graph(3)), poly({0, -1, 0, 1}));
  EXPECT_EQ(na_charpoly_by_decomposition(path_graph(2)), poly({-1, 0, 1}));
  EXPECT_EQ(na_charpoly_by_decomposition(cycle_graph(4)), poly({0, 0, -1, 0, 1}));
  EXPECT_THROW(na_charpoly_by_decomposition(Graph(2)), GraphError);
  EXPECT_THROW(na_charpoly_by_decomposition(cycle_graph(17)), GraphError);
}

TEST(NormalizedByDecomposition, MatchesDeterminantRoute) {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : all_graphs(n, {.no_isolated = true}))
      ASSERT_EQ(na_charpoly_by_decomposition(g), char_poly(g, MatrixKind::NormalizedAdjacency).charpoly)
          << graph6_encode(g);
}

TEST(CompleteBipartiteSum, Values) {
  EXPECT_EQ(ktt_full_sum(1), -1);
  for (int t = 2; t <= 5; ++t) EXPECT_EQ(ktt_full_sum(t), 0) << t;
  for (int t = 1; t <= 5; ++t) {
    EXPECT_EQ(ktt_full_sum(t), det_int(integer_matrix(complete_bipartite(t, t), MatrixKind::Adjacency)));
  }
  EXPECT_THROW(ktt_full_sum(0), GraphError);
}

TEST(Blocks, Validation) {
  const Graph k13 = star_graph(3);
  EXPECT_NO_THROW(validate_blocks(k13, {{0b0001, 0b1110}}));
  EXPECT_THROW(validate_blocks(k13, {{0b0010, 0b1100}}), GraphError);                    // not complete
  EXPECT_THROW(validate_blocks(k13, {{0b0001, 0b0010}}), GraphError);                    // q-side too small
  EXPECT_THROW(validate_blocks(k13, {{0b0001, 0b0110}, {0b0001, 0b1100}}), GraphError);  // shared edge
  EXPECT_THROW(validate_blocks(k13, {{0b0011, 0b0110}}), GraphError);                    // overlap
}

TEST(Blocks, RestrictedSumExamples) {
  const Ornament k13 = build_ornamented(parse_word("ie"), 1, 3);
  EXPECT_EQ(restricted_na_charpoly(k13.graph, k13.blocks), poly({0, 0, -1, 0, 1}));
  const Ornament c4 = build_ornamented(parse_word("ie"), 2, 2);
  EXPECT_EQ(restricted_na_charpoly(c4.graph, c4.blocks), poly({0, 0, -1, 0, 1}));
  const Graph g = complete_graph(4);
  EXPECT_EQ(restricted_na_charpoly(g, {}), na_charpoly_by_decomposition(g));
}

// Every ornament with at most three blocks and p + q <= 6.
TEST(Blocks, RestrictedSumOnOrnaments) {
  int checked = 0;
  for (int letters = 1; letters <= 3; ++letters)
    for (const WordTree& w : all_words(letters))
      for (int p = 1; p <= 4; ++p)
        for (int q = 2; p + q <= 6; ++q) {
          const Ornament o = build_ornamented(ExtendedWord{w}, p, q);
          ASSERT_EQ(restricted_na_charpoly(o.graph, o.blocks), na_charpoly_by_decomposition(o.graph))
              << print_word(ExtendedWord{w}) << " " << p << "," << q;
          ++checked;
        }
  EXPECT_GT(checked, 0);
}
