#pragma once

#include <functional>
#include <vector>

#include "fauxtree/graph.hpp"

namespace fauxtree {

/// One tree per isomorphism class on `n` vertices (1 <= n <= 20), in the
/// deterministic order of the constant-time level-sequence generator.
std::vector<Graph> free_trees(int n);

/// Restrictions for graph generation. `max_edges` is hereditary and prunes
/// generation at every level; the remaining fields filter the final level only.
struct GraphFilter {
  int max_edges = -1;  ///< -1: unbounded
  int exact_edges = -1;
  bool connected = false;
  bool no_isolated = false;

  bool accepts(const Graph& g) const;
};

/// Canonically labelled representatives of every isomorphism class of
/// graphs on `n` vertices (n <= 10) satisfying `filter`.
///
/// Generated by canonical augmentation: each canonical graph on n-1 vertices
/// is extended by a vertex over every neighbour subset; a child is kept when
/// deleting the new vertex gives the same isomorphism class as deleting the
/// vertex that the canonical labelling places last, and siblings from the
/// same parent are deduplicated.
std::vector<Graph> all_graphs(int n, const GraphFilter& filter = {}, int threads = 1);

/// Streams the graphs of all_graphs() without materialising the last level.
/// `visit(g, worker)` runs concurrently on up to `threads` workers; `worker`
/// is in [0, threads) and identifies the calling thread.
void for_each_graph(int n, const GraphFilter& filter, int threads,
                    const std::function<void(const Graph&, int)>& visit);

/// Canonical children of a canonical parent under one-vertex augmentation;
/// children with more than `max_edges` edges (when >= 0) are skipped.
std::vector<Graph> augment(const Graph& parent, int max_edges = -1);

/// Connected unicyclic graphs on `m` vertices whose cycle is odd, canonical
/// and deduplicated; built as a tree plus one edge closing an odd cycle.
std::vector<Graph> odd_unicyclic_graphs(int m);

/// Non-trees on `n` vertices that split as one tree plus l >= 1 odd unicyclic
/// components with |tree| * 4^l = n. Empty unless 4 divides n.
std::vector<Graph> q_candidates(int n);

/// Applies `fn(i, worker)` for i in [0, count) over up to `threads` worker
/// threads; work items are handed out in index order.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, int)>& fn);

}  // namespace fauxtree
