#pragma once

#include <functional>
#include <vector>

#include "fauxtree/graph.hpp"
#include "fauxtree/polynomial.hpp"

namespace fauxtree {

/// Vertex-disjoint edges (2-cycles) and cycles of length >= 3 in a host graph.
///
/// Each part is a vertex sequence; an edge has two entries, a cycle lists its
/// vertices in traversal order starting at its smallest vertex.
struct CycleDecomposition {
  std::vector<std::vector<int>> parts;
  int unused = 0;  ///< host vertices not covered by any part

  int long_cycles() const;
  int cycle_count() const { return static_cast<int>(parts.size()); }
  VertexSet covered() const;
};

/// Oracle inputs are capped at this many vertices.
inline constexpr int kDecompositionMaxVertices = 16;

/// Calls `visit` once per cycle decomposition of `g`, the empty one included.
void for_each_decomposition(const Graph& g,
                            const std::function<void(const CycleDecomposition&)>& visit);
std::vector<CycleDecomposition> enumerate_decompositions(const Graph& g);

/// Characteristic polynomial of the normalized adjacency by summing
/// x^u 2^lng (-1)^cy / prod deg over all cycle decompositions.
RatPoly na_charpoly_by_decomposition(const Graph& g);

/// Sum of 2^lng (-1)^cy over the decompositions of K_{t,t} covering every vertex.
mpz_class ktt_full_sum(int t);

/// A complete bipartite subgraph given by its two vertex sides.
struct Block {
  VertexSet p_side = 0;
  VertexSet q_side = 0;
};
using BlockSet = std::vector<Block>;

/// Throws GraphError unless every block is complete bipartite in `g` with a
/// q-side of at least two vertices and the blocks are pairwise edge-disjoint.
void validate_blocks(const Graph& g, const BlockSet& blocks);

/// The decomposition sum restricted to decompositions in which each block
/// holds at most one internal part, and that part is a single edge.
RatPoly restricted_na_charpoly(const Graph& g, const BlockSet& blocks);

}  // namespace fauxtree
