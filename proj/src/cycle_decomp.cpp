#include "fauxtree/cycle_decomp.hpp"

#include <string>

namespace fauxtree {
namespace {

void check_oracle_size(const Graph& g) {
  if (g.order() > kDecompositionMaxVertices) {
    throw GraphError("cycle-decomposition oracle is limited to " +
                     std::to_string(kDecompositionMaxVertices) + " vertices");
  }
}

void require_no_isolated(const Graph& g) {
  if (g.order() == 0 || min_degree(g) == 0) {
    throw GraphError("normalized adjacency needs a graph without isolated vertices");
  }
}

// Recursive search over the lowest undecided vertex: leave it unused, pair it
// with a higher neighbour, or start a cycle at it. Cycles are generated once:
// they start at their smallest vertex and their second vertex is smaller than
// their last.
class Enumerator {
 public:
  Enumerator(const Graph& g, bool cover_all,
             const std::function<void(const CycleDecomposition&)>& visit)
      : g_(g), cover_all_(cover_all), visit_(visit) {}

  void run() { step(0); }

 private:
  void step(VertexSet decided) {
    const VertexSet open = g_.vertices() & ~decided;
    if (!open) {
      visit_(current_);
      return;
    }
    const int v = std::countr_zero(open);
    const VertexSet vb = vertex_bit(v);

    if (!cover_all_) {
      ++current_.unused;
      step(decided | vb);
      --current_.unused;
    }

    VertexSet nbrs = g_.neighbors(v) & open;
    VertexSet s = nbrs;
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      current_.parts.push_back({v, u});
      step(decided | vb | vertex_bit(u));
      current_.parts.pop_back();
    }

    // Cycles through v using only open vertices above v.
    std::vector<int> path{v};
    extend_cycle(decided, path, vb);
  }

  void extend_cycle(VertexSet decided, std::vector<int>& path, VertexSet used) {
    const int start = path.front();
    const int last = path.back();
    const VertexSet open = g_.vertices() & ~decided & ~used;
    VertexSet s = g_.neighbors(last) & open;
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      path.push_back(u);
      const VertexSet now = used | vertex_bit(u);
      if (path.size() >= 3 && g_.adjacent(u, start) && path[1] < u) {
        current_.parts.push_back(path);
        step(decided | now);
        current_.parts.pop_back();
      }
      extend_cycle(decided, path, now);
      path.pop_back();
    }
  }

  const Graph& g_;
  bool cover_all_;
  const std::function<void(const CycleDecomposition&)>& visit_;
  CycleDecomposition current_;
};

// Sums x^u 2^lng (-1)^cy prod_{v in C} 1/deg(v) over the decompositions
// accepted by `keep`. Accumulates over the common denominator prod_v deg(v),
// i.e. each term contributes 2^lng (-1)^cy prod_{v not in C} deg(v).
RatPoly decomposition_sum(const Graph& g,
                          const std::function<bool(const CycleDecomposition&)>& keep) {
  const int n = g.order();
  std::vector<__int128> acc(n + 1, 0);
  for_each_decomposition(g, [&](const CycleDecomposition& c) {
    if (!keep(c)) return;
    __int128 term = (c.cycle_count() % 2 == 0) ? 1 : -1;
    term <<= c.long_cycles();
    VertexSet uncovered = g.vertices() & ~c.covered();
    while (uncovered) {
      int v = std::countr_zero(uncovered);
      uncovered &= uncovered - 1;
      term *= degree(g, v);
    }
    acc[c.unused] += term;
  });
  mpz_class denom = 1;
  for (int v = 0; v < n; ++v) denom *= degree(g, v);
  std::vector<mpq_class> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    const bool negative = acc[k] < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(acc[k])
                                     : static_cast<unsigned __int128>(acc[k]);
    mpz_class hi = static_cast<unsigned long>(mag >> 64);
    mpz_class lo = static_cast<unsigned long>(mag & ~0ULL);
    mpz_class num = (hi << 64) + lo;
    if (negative) num = -num;
    coeffs[k] = mpq_class(num, denom);
    coeffs[k].canonicalize();
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace

int CycleDecomposition::long_cycles() const {
  int k = 0;
  for (const auto& p : parts) k += p.size() >= 3 ? 1 : 0;
  return k;
}

VertexSet CycleDecomposition::covered() const {
  VertexSet s = 0;
  for (const auto& p : parts)
    for (int v : p) s |= vertex_bit(v);
  return s;
}

void for_each_decomposition(const Graph& g,
                            const std::function<void(const CycleDecomposition&)>& visit) {
  check_oracle_size(g);
  Enumerator(g, false, visit).run();
}

std::vector<CycleDecomposition> enumerate_decompositions(const Graph& g) {
  std::vector<CycleDecomposition> out;
  for_each_decomposition(g, [&](const CycleDecomposition& c) { out.push_back(c); });
  return out;
}

RatPoly na_charpoly_by_decomposition(const Graph& g) {
  check_oracle_size(g);
  require_no_isolated(g);
  return decomposition_sum(g, [](const CycleDecomposition&) { return true; });
}

mpz_class ktt_full_sum(int t) {
  if (t < 1 || 2 * t > kDecompositionMaxVertices) {
    throw GraphError("ktt_full_sum needs 1 <= t <= 8");
  }
  const Graph g = complete_bipartite(t, t);
  mpz_class total = 0;
  std::function<void(const CycleDecomposition&)> add = [&](const CycleDecomposition& c) {
    long term = (c.cycle_count() % 2 == 0) ? 1 : -1;
    total += term << c.long_cycles();
  };
  Enumerator(g, true, add).run();
  return total;
}

void validate_blocks(const Graph& g, const BlockSet& blocks) {
  std::vector<VertexSet> seen(g.order(), 0);  // block edges already claimed, per vertex
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    const std::string where = "block " + std::to_string(b) + ": ";
    if ((blk.p_side | blk.q_side) & ~g.vertices()) throw GraphError(where + "vertex out of range");
    if (blk.p_side & blk.q_side) throw GraphError(where + "sides overlap");
    if (blk.p_side == 0) throw GraphError(where + "empty p-side");
    if (std::popcount(blk.q_side) < 2) throw GraphError(where + "q-side needs two vertices");
    VertexSet s = blk.p_side;
    while (s) {
      int u = std::countr_zero(s);
      s &= s - 1;
      if ((g.neighbors(u) & blk.q_side) != blk.q_side) {
        throw GraphError(where + "not complete bipartite in the host graph");
      }
      if (seen[u] & blk.q_side) throw GraphError(where + "shares an edge with an earlier block");
      seen[u] |= blk.q_side;
      VertexSet t = blk.q_side;
      while (t) {
        int v = std::countr_zero(t);
        t &= t - 1;
        seen[v] |= vertex_bit(u);
      }
    }
  }
}

RatPoly restricted_na_charpoly(const Graph& g, const BlockSet& blocks) {
  check_oracle_size(g);
  require_no_isolated(g);
  validate_blocks(g, blocks);
  auto in_block = [](const Block& b, int u, int v) {
    return ((b.p_side & vertex_bit(u)) && (b.q_side & vertex_bit(v))) ||
           ((b.q_side & vertex_bit(u)) && (b.p_side & vertex_bit(v)));
  };
  auto internal = [&](const Block& b, const std::vector<int>& part) {
    if (part.size() == 2) return in_block(b, part[0], part[1]);
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (!in_block(b, part[i], part[(i + 1) % part.size()])) return false;
    }
    return true;
  };
  return decomposition_sum(g, [&](const CycleDecomposition& c) {
    for (const Block& b : blocks) {
      int count = 0;
      for (const auto& part : c.parts) {
        if (!internal(b, part)) continue;
        if (part.size() != 2 || ++count > 1) return false;
      }
    }
    return true;
  });
}

}  // namespace fauxtree
