// Canonical labelling by equitable partition refinement plus a backtracking
// search over individualised vertices. The canonical leaf is the one with the
// smallest (refinement trace, relabelled adjacency rows) key; subtrees are
// pruned when their trace prefix already exceeds the best key, and through
// automorphisms found by comparing leaves with the first and best leaves.

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>

#include "fauxtree/graph.hpp"

namespace fauxtree {
namespace {

using Rows = std::array<VertexSet, kMaxVertices>;
using Cells = std::vector<VertexSet>;

constexpr int kNoJump = INT_MAX;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001b3ULL;
}

// Refines `cells` to the coarsest equitable partition finer than it, using the
// cells in `splitters` as the initial splitting queue. Returns a trace hash
// that depends only on label-invariant data.
std::uint64_t refine(const Graph& g, Cells& cells, std::vector<VertexSet> splitters) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  while (!splitters.empty()) {
    const VertexSet w = splitters.back();
    splitters.pop_back();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const VertexSet x = cells[i];
      if (std::popcount(x) == 1) continue;
      std::array<VertexSet, kMaxVertices + 1> bucket{};
      int lo = kMaxVertices + 1, hi = -1;
      VertexSet s = x;
      while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        int c = std::popcount(g.neighbors(v) & w);
        bucket[c] |= vertex_bit(v);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) continue;
      Cells pieces;
      for (int c = lo; c <= hi; ++c) {
        if (!bucket[c]) continue;
        pieces.push_back(bucket[c]);
        h = mix(h, (static_cast<std::uint64_t>(i) << 40) ^ (static_cast<std::uint64_t>(c) << 20) ^
                       static_cast<std::uint64_t>(std::popcount(bucket[c])));
      }
      cells[i] = pieces[0];
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i) + 1, pieces.begin() + 1,
                   pieces.end());
      for (VertexSet p : pieces) splitters.push_back(p);
      i += pieces.size() - 1;
    }
  }
  return mix(h, cells.size());
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    if (n_ == 0) {
      out.graph = g_;
      return out;
    }
    Cells cells{g_.vertices()};
    Cells splitters = cells;
    search(cells, splitters);
    out.label = best_label_;
    out.graph = Graph::from_rows(n_, std::span(best_rows_.data(), n_));
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  // Returns the depth the caller chain should unwind to, or kNoJump.
  int search(Cells& cells, const Cells& splitters) {
    const int depth = static_cast<int>(path_.size());
    trace_.resize(depth);
    trace_.push_back(refine(g_, cells, splitters));

    if (have_best_ && compare_trace_prefix() > 0) return kNoJump;

    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (std::popcount(cells[target]) == 1) ++target;

    VertexSet tried = 0;
    VertexSet todo = cells[target];
    while (todo) {
      const int v = std::countr_zero(todo);
      todo &= todo - 1;
      if (tried && equivalent_to_tried(v, tried)) continue;
      tried |= vertex_bit(v);

      Cells child = cells;
      child[target] = vertex_bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                   cells[target] & ~vertex_bit(v));
      path_.push_back(v);
      int jump = search(child, Cells{vertex_bit(v)});
      path_.pop_back();
      trace_.resize(depth + 1);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  // Lexicographic comparison of the current trace against the best leaf's
  // trace restricted to the current depth. A best trace that is a proper
  // prefix of the current one compares smaller.
  int compare_trace_prefix() const {
    const std::size_t len = trace_.size();
    for (std::size_t i = 0; i < len; ++i) {
      if (i >= best_trace_.size()) return 1;
      if (trace_[i] != best_trace_[i]) return trace_[i] < best_trace_[i] ? -1 : 1;
    }
    return 0;
  }

  int leaf(const Cells& cells) {
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[std::countr_zero(cells[i])] = i;
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      VertexSet s = g_.neighbors(v);
      VertexSet row = 0;
      while (s) {
        int u = std::countr_zero(s);
        s &= s - 1;
        row |= vertex_bit(label[u]);
      }
      rows[label[v]] = row;
    }

    if (!have_best_) {
      have_best_ = true;
      first_rows_ = best_rows_ = rows;
      first_label_ = best_label_ = label;
      first_path_ = best_path_ = path_;
      best_trace_ = trace_;
      return kNoJump;
    }

    if (rows == first_rows_) {
      record_automorphism(first_label_, label);
      return divergence(first_path_);
    }

    int cmp = 0;
    if (trace_ != best_trace_) {
      cmp = std::lexicographical_compare(trace_.begin(), trace_.end(), best_trace_.begin(),
                                         best_trace_.end())
                ? -1
                : 1;
    } else {
      cmp = compare_rows(rows, best_rows_);
    }
    if (cmp < 0) {
      best_rows_ = rows;
      best_label_ = label;
      best_path_ = path_;
      best_trace_ = trace_;
    } else if (cmp == 0) {
      record_automorphism(best_label_, label);
      return divergence(best_path_);
    }
    return kNoJump;
  }

  int compare_rows(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  // Both labellings give the same relabelled graph, so reference^-1 . label is
  // an automorphism.
  void record_automorphism(const std::vector<int>& reference, const std::vector<int>& label) {
    std::vector<int> inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[reference[v]] = v;
    std::vector<int> gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = inverse[label[v]];
    autos_.push_back(std::move(gamma));
  }

  int divergence(const std::vector<int>& other) const {
    std::size_t k = 0;
    while (k < path_.size() && k < other.size() && path_[k] == other[k]) ++k;
    return static_cast<int>(k);
  }

  bool equivalent_to_tried(int v, VertexSet tried) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : autos_) {
      bool fixes_path = std::all_of(path_.begin(), path_.end(), [&](int u) { return gamma[u] == u; });
      if (!fixes_path) continue;
      for (int u = 0; u < n_; ++u) {
        int a = find_root(parent, u), b = find_root(parent, gamma[u]);
        if (a != b) parent[a] = b;
      }
    }
    const int rv = find_root(parent, v);
    while (tried) {
      int u = std::countr_zero(tried);
      tried &= tried - 1;
      if (find_root(parent, u) == rv) return true;
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  std::vector<int> path_;
  std::vector<std::uint64_t> trace_;

  bool have_best_ = false;
  Rows first_rows_{}, best_rows_{};
  std::vector<int> first_label_, best_label_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::uint64_t> best_trace_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Search(g).run(); }

std::pair<CanonicalCert, std::vector<int>> canonical_form(const Graph& g) {
  CanonicalLabeling c = canonical_labeling(g);
  return {CanonicalCert{graph6_encode(c.graph)}, std::move(c.label)};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace fauxtree
