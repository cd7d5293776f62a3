// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "fauxtree/census.hpp"
#include "fauxtree/constructions.hpp"
#include "fauxtree/cycle_decomp.hpp"
#include "fauxtree/enumerate.hpp"
#include "fauxtree/spectra.hpp"
#include "fauxtree/word.hpp"

using namespace fauxtree;

namespace {

constexpr auto A = MatrixKind::Adjacency;
constexpr auto L = MatrixKind::Laplacian;
constexpr auto Q = MatrixKind::SignlessLaplacian;
constexpr auto NA = MatrixKind::NormalizedAdjacency;

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string note;

  void check(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.check(secs <= budget_s, "over the " + std::to_string(budget_s) + " s budget");
  if (!out.ok) ++failures;
  std::printf("%s criterion %2d: %s [%.2f s / %.0f s]%s%s%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              budget_s, out.note.empty() ? "" : " ", out.note.c_str(), out.detail.empty() ? "" : " -- ",
              out.detail.c_str());
  std::fflush(stdout);
}

std::pair<long, long> run_census(int n, MatrixKind kind, CensusMode mode = CensusMode::Brute,
                                 bool prune = true) {
  CensusOptions o;
  o.n = n;
  o.kind = kind;
  o.mode = mode;
  o.prune = prune;
  o.threads = threads();
  const CensusTable t = census(o);
  return {t.faux_tree_count, t.trees_with_mate_count};
}

std::string pair_str(std::pair<long, long> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

void expect_census(Outcome& out, int n, MatrixKind kind, std::pair<long, long> want,
                   CensusMode mode = CensusMode::Brute) {
  const auto got = run_census(n, kind, mode);
  out.check(got == want, std::string(kind_label(kind)) + " n=" + std::to_string(n) + " got " + pair_str(got) +
                             " want " + pair_str(want));
}

int bipartite_components(const Graph& g) {
  int k = 0;
  for (VertexSet c : components(g)) k += is_bipartite(g.induced(c)) ? 1 : 0;
  return k;
}

}  // namespace

int main() {
  criterion(1, "free tree counts for n = 4..14 and n = 16", 5, [](Outcome& out) {
    const std::vector<std::size_t> want{2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
    for (int n = 4; n <= 14; ++n) {
      const auto got = free_trees(n).size();
      out.check(got == want[n - 4], "n=" + std::to_string(n) + " got " + std::to_string(got));
    }
    out.check(free_trees(16).size() == 19320, "n=16");
  });

  criterion(2, "A census n = 4..9 (faux, trees with mate)", 300, [](Outcome& out) {
    const std::vector<std::pair<long, long>> want{{0, 0}, {1, 1}, {1, 1}, {6, 6}, {5, 5}, {30, 24}};
    for (int n = 4; n <= 9; ++n) expect_census(out, n, A, want[n - 4]);
  });

  criterion(3, "normalized adjacency census n = 4..9, pruned = unpruned for n <= 7", 600, [](Outcome& out) {
    const std::vector<std::pair<long, long>> want{{1, 1}, {1, 1}, {2, 1}, {4, 2}, {3, 1}, {8, 4}};
    for (int n = 4; n <= 9; ++n) expect_census(out, n, NA, want[n - 4]);
    for (int n = 2; n <= 7; ++n) {
      const auto pruned = run_census(n, NA, CensusMode::Brute, true);
      const auto full = run_census(n, NA, CensusMode::Brute, false);
      out.check(pruned == full, "pruning changed n=" + std::to_string(n));
    }
  });

  criterion(4, "Q census: brute n = 4, 8; structured n = 12, 16", 600, [](Outcome& out) {
    expect_census(out, 4, Q, {1, 1});
    expect_census(out, 8, Q, {2, 2});
    expect_census(out, 12, Q, {9, 9}, CensusMode::Structured);
    expect_census(out, 16, Q, {48, 34}, CensusMode::Structured);
  });

  criterion(5, "no L faux trees for n <= 9", 300, [](Outcome& out) {
    for (int n = 1; n <= 9; ++n) {
      const auto got = run_census(n, L);
      out.check(got.first == 0, "n=" + std::to_string(n) + " has " + std::to_string(got.first));
    }
  });

  criterion(6, "decomposition sum = determinant route, connected graphs n <= 6", 60, [](Outcome& out) {
    int count = 0, six = 0;
    for (int n = 2; n <= 6; ++n) {
      for (const Graph& g : all_graphs(n, {.connected = true})) {
        ++count;
        six += n == 6;
        out.check(na_charpoly_by_decomposition(g) == char_poly(g, NA).charpoly, graph6_encode(g));
      }
    }
    out.note = "(" + std::to_string(count) + " graphs)";
    out.check(six == 112, "expected 112 connected graphs on 6 vertices, saw " + std::to_string(six));
    out.check(count == 142, "expected 142 connected graphs on 2..6 vertices, saw " + std::to_string(count));
  });

  criterion(7, "K_{t,t} full decomposition sums", 1, [](Outcome& out) {
    out.check(ktt_full_sum(1) == -1, "t=1");
    for (int t = 2; t <= 5; ++t) out.check(ktt_full_sum(t) == 0, "t=" + std::to_string(t));
  });

  criterion(8, "ornaments of every full binary tree with <= 4 letters, p+q = 4..8", 120, [](Outcome& out) {
    std::set<Graph> shapes;
    int words = 0;
    for (int letters = 1; letters <= 4; ++letters) {
      for (const WordTree& w : all_words(letters)) {
        const ExtendedWord ew{w};
        ++words;
        shapes.insert(canonical_graph(tree_of_word(ew).graph));
        for (int c = 4; c <= 8; ++c) {
          std::vector<RatPoly> polys;
          for (int p = 1; p <= c - 2; ++p) {
            const RatPoly direct = char_poly(build_ornamented(ew, p, c - p).graph, NA).charpoly;
            out.check(direct == transfer_charpoly(ew, p, c - p),
                      "transfer differs " + print_word(ew) + " " + std::to_string(p) + "," + std::to_string(c - p));
            polys.push_back(direct);
          }
          for (const auto& p : polys) out.check(p == polys.front(), "not cospectral " + print_word(ew));
        }
      }
    }
    out.note = "(" + std::to_string(words) + " words)";
    // both sibling orders are enumerated, so 8 words cover the 7 shapes
    out.check(words == 8 && shapes.size() == 7,
              std::to_string(words) + " words, " + std::to_string(shapes.size()) + " shapes");
  });

  criterion(9, "intertwiner identities for 1 <= p <= 6, 2 <= q <= 8, p+q >= 4", 60, [](Outcome& out) {
    for (int p = 1; p <= 6; ++p)
      for (int q = 2; q <= 8; ++q)
        if (p + q >= 4) out.check(verify_intertwiner(p, q).ok(), std::to_string(p) + "," + std::to_string(q));
  });

  criterion(10, "limb swap on 100 seeded random hosts (<= 13 vertices)", 60, [](Outcome& out) {
    std::mt19937_64 rng(20240601);
    int max_order = 0;
    for (int i = 0; i < 100; ++i) {
      const Graph s = random_limb_host(13, rng);
      max_order = std::max(max_order, s.order());
      const auto sites = limb_occurrences(s, limb_pair().t1);
      if (sites.empty()) {
        out.check(false, "no site in host " + graph6_encode(s));
        continue;
      }
      const Graph swapped = limb_swap(s, sites.front()).graph;
      out.check(cospectral(s, swapped, A), "not cospectral " + graph6_encode(s));
      out.check(!is_tree(swapped), "still a tree " + graph6_encode(s));
    }
    out.note = "(largest host " + std::to_string(max_order) + " vertices)";
  });

  criterion(11, "Q attachment for every rooted tree on <= 5 vertices", 60, [](Outcome& out) {
    int pairs = 0;
    for (int k = 1; k <= 5; ++k)
      for (const Graph& t : free_trees(k))
        for (int r = 0; r < k; ++r) {
          const auto [a, b] = q_attach(RootedGraph(t, r));
          ++pairs;
          out.check(a.order() == 4 * k && b.order() == 4 * k, "order");
          out.check(cospectral(a, b, Q), graph6_encode(t) + " root " + std::to_string(r));
        }
    out.note = "(" + std::to_string(pairs) + " rooted trees)";
  });

  criterion(12, "fixed pairs: Q base pair, 16-vertex star attachment, 17-vertex ternary pair", 1,
            [](Outcome& out) {
              const auto [tri, star] = q_base_pair();
              out.check(cospectral(tri, star, Q), "base pair");
              const auto [a, b] = q_attach(RootedGraph(star_graph(3), 0));
              out.check(a.order() == 16 && cospectral(a, b, Q), "star attachment");
              const auto [t, g] = kary_example_pair();
              out.check(cospectral(t, g, NA), "ternary pair not cospectral");
              out.check(is_tree(t) != is_tree(g), "ternary pair tree count");
            });

  criterion(13, "spectral invariants over all graphs n <= 7", 120, [](Outcome& out) {
    int graphs = 0, unicyclic = 0;
    for (int n = 1; n <= 7; ++n) {
      for (const Graph& g : all_graphs(n, {}, threads())) {
        ++graphs;
        const std::string id = graph6_encode(g);
        const Spectrum l = char_poly(g, L), q = char_poly(g, Q);
        out.check(trace_from_spectrum(l) == 2 * g.edge_count(), "L trace " + id);
        out.check(trace_from_spectrum(q) == 2 * g.edge_count(), "Q trace " + id);
        out.check(root_multiplicity(l, 0) == static_cast<int>(components(g).size()), "L zero " + id);
        out.check(root_multiplicity(q, 0) == bipartite_components(g), "Q zero " + id);
        if (is_bipartite(g)) out.check(l.charpoly == q.charpoly, "bipartite L=Q " + id);
        if (is_connected(g)) {
          out.check(nonzero_eigenvalue_product(l) == n * spanning_tree_count(g), "matrix tree " + id);
        }
        if (is_odd_unicyclic(g)) ++unicyclic;
        if (is_odd_unicyclic(g)) out.check(det_from_spectrum(q) == 4, "odd unicyclic det " + id);
      }
    }
    out.note = "(" + std::to_string(graphs) + " graphs, " + std::to_string(unicyclic) + " odd unicyclic)";
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
