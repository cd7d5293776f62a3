#include "fauxtree/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace fauxtree {

// ---------------------------------------------------------------------------
// Free trees: Wright-Richmond-Odlyzko-McKay constant-time generation over
// level sequences (the sequence of vertex depths in preorder).

namespace {

using Layout = std::vector<int>;

bool next_rooted_tree(Layout& layout, int p) {
  if (p == 0) return false;
  int q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = p; i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

bool next_rooted_tree(Layout& layout) {
  int p = static_cast<int>(layout.size()) - 1;
  while (layout[p] == 1) --p;
  return next_rooted_tree(layout, p);
}

// Splits at the second vertex of depth 1: the first subtree of the root
// (depths shifted up by one) and the root with its remaining subtrees.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] != 1) continue;
    if (one_found) {
      m = i;
      break;
    }
    one_found = true;
  }
  Layout left, rest{0};
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
  return {left, rest};
}

// Advances `layout` to the next level sequence that is the canonical
// centre-rooted form of a free tree (possibly `layout` itself).
void next_tree(Layout& layout) {
  auto [left, rest] = split_tree(layout);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return;
  const int p = static_cast<int>(left.size());
  const int old_p = layout[p];
  next_rooted_tree(layout, p);
  if (old_p > 2) {
    auto [new_left, new_rest] = split_tree(layout);
    const int new_left_height = *std::max_element(new_left.begin(), new_left.end());
    const int len = new_left_height + 1;
    for (int k = 0; k < len; ++k) layout[layout.size() - len + k] = k + 1;
  }
}

Graph layout_to_graph(const Layout& layout) {
  const int n = static_cast<int>(layout.size());
  std::vector<Graph::Edge> edges;
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (!stack.empty()) {
      while (layout[stack.back()] >= layout[i]) stack.pop_back();
      edges.emplace_back(stack.back(), i);
    }
    stack.push_back(i);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

std::vector<Graph> free_trees(int n) {
  if (n < 1 || n > 20) throw GraphError("free_trees supports 1 <= n <= 20");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {path_graph(2)};
  Layout layout;
  for (int i = 0; i <= n / 2; ++i) layout.push_back(i);
  for (int i = 1; i < (n + 1) / 2; ++i) layout.push_back(i);
  std::vector<Graph> out;
  while (true) {
    next_tree(layout);
    out.push_back(layout_to_graph(layout));
    if (!next_rooted_tree(layout)) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parallel helper

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, int)>& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < count; i = next++) fn(i, w);
    });
  }
}

// ---------------------------------------------------------------------------
// Canonical augmentation

bool GraphFilter::accepts(const Graph& g) const {
  const int e = g.edge_count();
  if (max_edges >= 0 && e > max_edges) return false;
  if (exact_edges >= 0 && e != exact_edges) return false;
  if (no_isolated && min_degree(g) == 0) return false;
  if (connected && !is_connected(g)) return false;
  return true;
}

namespace {

bool same_orbit(const std::vector<std::vector<int>>& autos, int n, int a, int b) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& gamma : autos) {
    for (int v = 0; v < n; ++v) {
      int x = find(v), y = find(gamma[v]);
      if (x != y) parent[x] = y;
    }
  }
  return find(a) == find(b);
}

}  // namespace

std::vector<Graph> augment(const Graph& parent, int max_edges) {
  const int m = parent.order();
  const int parent_edges = parent.edge_count();
  std::set<Graph> kept;
  const VertexSet limit = (m >= 31) ? 0 : vertex_bit(m);
  for (VertexSet s = 0;; ++s) {
    if (m < 31 && s >= limit) break;
    if (max_edges < 0 || parent_edges + std::popcount(s) <= max_edges) {
      const Graph g = parent.with_vertex(s);
      // Acceptance forces deg(new) == deg(last canonical vertex), which is a
      // maximum-degree vertex because refinement orders cells by degree.
      if (std::popcount(s) == max_degree(g)) {
        CanonicalLabeling c = canonical_labeling(g);
        int last = 0;
        while (c.label[last] != m) ++last;
        bool accept = (last == m) || same_orbit(c.automorphisms, m + 1, m, last);
        if (!accept) accept = canonical_graph(g.without_vertex(last)) == parent;
        if (accept) kept.insert(std::move(c.graph));
      }
    }
    if (m >= 31 && s == first_vertices(m)) break;
  }
  return {kept.begin(), kept.end()};
}

std::vector<Graph> all_graphs(int n, const GraphFilter& filter, int threads) {
  std::vector<Graph> out;
  std::vector<std::vector<Graph>> per_worker(std::max(1, threads));
  for_each_graph(n, filter, threads, [&](const Graph& g, int worker) {
    per_worker[worker].push_back(g);
  });
  for (auto& chunk : per_worker) out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_graph(int n, const GraphFilter& filter, int threads,
                    const std::function<void(const Graph&, int)>& visit) {
  if (n < 1 || n > 10) throw GraphError("all_graphs supports 1 <= n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k < n + 1; ++k) {
    if (k == n) break;
    std::vector<std::vector<Graph>> children(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i, int) {
      children[i] = augment(level[i], filter.max_edges);
    });
    std::vector<Graph> next;
    for (auto& c : children) next.insert(next.end(), c.begin(), c.end());
    level = std::move(next);
  }
  if (n == 1) {
    if (filter.accepts(level[0])) visit(level[0], 0);
    return;
  }
  parallel_for(level.size(), threads, [&](std::size_t i, int worker) {
    for (const Graph& g : augment(level[i], filter.max_edges)) {
      if (filter.accepts(g)) visit(g, worker);
    }
  });
}

// ---------------------------------------------------------------------------
// Structured candidates for signless-Laplacian faux trees

std::vector<Graph> odd_unicyclic_graphs(int m) {
  if (m < 3) return {};
  std::set<Graph> out;
  for (const Graph& t : free_trees(m)) {
    for (int u = 0; u < m; ++u) {
      const std::vector<int> dist = distances_from(t, u);
      for (int v = u + 1; v < m; ++v) {
        if (dist[v] >= 2 && dist[v] % 2 == 0) out.insert(canonical_graph(t.with_edge(u, v)));
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

// Non-increasing partitions of `total` into exactly `parts` parts, each >= 3.
void partitions(int total, int parts, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int s = std::min(total - 3 * (parts - 1), max_part); s >= 3; --s) {
    cur.push_back(s);
    partitions(total - s, parts - 1, s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Graph> q_candidates(int n) {
  if (n < 4 || n % 4 != 0) return {};
  if (n > 20) throw GraphError("q_candidates supports n <= 20");
  std::map<int, std::vector<Graph>> unicyclic;
  std::set<Graph> out;
  for (int power = 4, l = 1; power <= n; power *= 4, ++l) {
    if (n % power != 0) continue;
    const int tree_size = n / power;
    const int rest = n - tree_size;
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    partitions(rest, l, rest, cur, shapes);
    for (const auto& shape : shapes) {
      for (int s : shape) {
        if (!unicyclic.contains(s)) unicyclic[s] = odd_unicyclic_graphs(s);
      }
      for (const Graph& tree : free_trees(tree_size)) {
        // Multiset choice: indices non-increasing across equal part sizes.
        std::vector<std::size_t> pick(shape.size(), 0);
        std::function<void(std::size_t, Graph)> choose = [&](std::size_t i, Graph acc) {
          if (i == shape.size()) {
            out.insert(canonical_graph(acc));
            return;
          }
          const auto& pool = unicyclic[shape[i]];
          const std::size_t start = (i > 0 && shape[i] == shape[i - 1]) ? pick[i - 1] : 0;
          for (std::size_t j = start; j < pool.size(); ++j) {
            pick[i] = j;
            choose(i + 1, disjoint_union(acc, pool[j]));
          }
        };
        choose(0, tree);
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace fauxtree
