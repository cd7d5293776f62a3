#include "fauxtree/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fauxtree/enumerate.hpp"

namespace fauxtree {

std::string_view mode_label(CensusMode mode) {
  return mode == CensusMode::Brute ? "brute" : "structured";
}

std::optional<CensusMode> parse_mode(std::string_view label) {
  if (label == "brute") return CensusMode::Brute;
  if (label == "structured") return CensusMode::Structured;
  return std::nullopt;
}

std::string spectral_key(const RatPoly& p) {
  std::string key;
  for (const auto& c : coefficient_strings(p)) {
    if (!key.empty()) key += ',';
    key += c;
  }
  return key;
}

std::pair<long, long> CensusTable::recount() const {
  long faux = 0, mated = 0;
  for (const auto& c : classes) {
    if (!c.mixed()) continue;
    faux += static_cast<long>(c.non_trees.size());
    mated += static_cast<long>(c.trees.size());
  }
  return {faux, mated};
}

namespace {

void check_options(const CensusOptions& o) {
  if (o.mode == CensusMode::Structured) {
    if (o.kind != MatrixKind::SignlessLaplacian) {
      throw CensusError("structured mode is only defined for Q");
    }
    if (o.n < 4 || o.n > 20) throw CensusError("structured mode needs 4 <= n <= 20");
    return;
  }
  if (o.n < 1 || o.n > 10) throw CensusError("brute mode needs 1 <= n <= 10");
  if (o.kind == MatrixKind::NormalizedAdjacency && o.n < 2) {
    throw CensusError("normalized adjacency census needs n >= 2");
  }
}

GraphFilter brute_filter(const CensusOptions& o) {
  GraphFilter f;
  switch (o.kind) {
    case MatrixKind::Adjacency:
      if (o.prune) f.max_edges = f.exact_edges = o.n - 1;
      break;
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian:
      f.max_edges = f.exact_edges = o.n - 1;
      break;
    case MatrixKind::NormalizedAdjacency:
      f.no_isolated = true;
      f.connected = o.prune;
      break;
  }
  return f;
}

}  // namespace

CensusTable census(const CensusOptions& o) {
  check_options(o);
  const int threads = std::max(1, o.threads);

  // Tree spectra first: only graphs landing in a tree class are retained.
  std::map<std::string, SpectralClass> classes;
  const std::vector<Graph> trees = free_trees(o.n);
  for (const Graph& t : trees) {
    RatPoly p = char_poly(t, o.kind).charpoly;
    std::string key = spectral_key(p);
    auto& cls = classes[key];
    if (cls.key.empty()) {
      cls.key = key;
      cls.charpoly = std::move(p);
    }
    cls.trees.push_back(canonical_graph(t));
  }

  // Per-worker partial results, merged by key afterwards.
  std::vector<std::vector<std::pair<SpectralClass*, Graph>>> hits(threads);
  std::vector<long> examined(threads, 0);
  auto visit = [&](const Graph& g, int worker) {
    ++examined[worker];
    if (is_tree(g)) return;
    const std::string key = spectral_key(char_poly(g, o.kind).charpoly);
    auto it = classes.find(key);
    if (it != classes.end()) hits[worker].emplace_back(&it->second, g);
  };

  if (o.mode == CensusMode::Brute) {
    for_each_graph(o.n, brute_filter(o), threads, visit);
  } else {
    const std::vector<Graph> candidates = q_candidates(o.n);
    parallel_for(candidates.size(), threads,
                 [&](std::size_t i, int worker) { visit(candidates[i], worker); });
  }

  for (auto& chunk : hits) {
    for (auto& [cls, g] : chunk) cls->non_trees.push_back(std::move(g));
  }

  CensusTable table;
  table.n = o.n;
  table.kind = o.kind;
  table.tree_count = static_cast<long>(trees.size());
  for (long e : examined) table.graphs_examined += e;
  for (auto& [key, cls] : classes) {
    std::sort(cls.trees.begin(), cls.trees.end());
    std::sort(cls.non_trees.begin(), cls.non_trees.end());
    table.classes.push_back(std::move(cls));
  }
  std::tie(table.faux_tree_count, table.trees_with_mate_count) = table.recount();
  return table;
}

std::string census_csv_header() { return "n,kind,trees,faux_trees,trees_with_mate"; }

std::string census_csv_row(const CensusTable& t) {
  std::ostringstream out;
  out << t.n << ',' << kind_label(t.kind) << ',' << t.tree_count << ',' << t.faux_tree_count
      << ',' << t.trees_with_mate_count;
  return out.str();
}

}  // namespace fauxtree
