// fauxtree command line: censuses, constructions and verifications.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "fauxtree/census.hpp"
#include "fauxtree/constructions.hpp"
#include "fauxtree/enumerate.hpp"
#include "fauxtree/spectra.hpp"
#include "fauxtree/word.hpp"

using nlohmann::json;
using namespace fauxtree;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNoOccurrence = 3;

struct RunConfig {
  int n = 4;
  std::string matrix = "A";
  std::string mode = "brute";
  std::string word;
  int p = 1, q = 2;
  int against_p = 0, against_q = 0;
  int p_max = 6, q_max = 8;
  std::string out;
  std::string json_out;
  std::string graph6;
  int root = 0;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  bool no_prune = false;
  bool random_host = false;
  int max_vertices = 13;
  bool states = false;
};

// Writes to --out when given, stdout otherwise.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot open " + cfg.out);
  f << text;
}

json poly_json(const RatPoly& p) { return coefficient_strings(p); }

json certificate(const Graph& a, const Graph& b, MatrixKind kind) {
  const RatPoly pa = char_poly(a, kind).charpoly;
  const RatPoly pb = char_poly(b, kind).charpoly;
  return {
      {"matrix", std::string(kind_label(kind))},
      {"first", {{"graph6", graph6_encode(a)}, {"charpoly", poly_json(pa)}, {"is_tree", is_tree(a)}}},
      {"second", {{"graph6", graph6_encode(b)}, {"charpoly", poly_json(pb)}, {"is_tree", is_tree(b)}}},
      {"verdict", pa == pb ? "cospectral" : "not cospectral"},
  };
}

bool certificate_ok(const json& cert) { return cert["verdict"] == "cospectral"; }

MatrixKind kind_from(const std::string& label) {
  auto k = parse_kind(label);
  if (!k) throw std::invalid_argument("unknown matrix '" + label + "' (use A, L, Q or NA)");
  return *k;
}

int cmd_trees(const RunConfig& cfg) {
  const auto trees = free_trees(cfg.n);
  std::string text;
  for (const Graph& t : trees) text += graph6_encode(t) + "\n";
  emit(cfg, text);
  std::cerr << trees.size() << " trees on " << cfg.n << " vertices\n";
  return 0;
}

json census_json(const CensusTable& t, const CensusOptions& o) {
  json classes = json::array();
  for (const auto& c : t.classes) {
    if (!c.mixed()) continue;
    json trees = json::array(), others = json::array();
    for (const Graph& g : c.trees) trees.push_back(graph6_encode(g));
    for (const Graph& g : c.non_trees) others.push_back(graph6_encode(g));
    classes.push_back({{"charpoly", poly_json(c.charpoly)}, {"trees", trees}, {"non_trees", others}});
  }
  return {
      {"schema", 1},
      {"command", "census"},
      {"n", t.n},
      {"matrix", std::string(kind_label(t.kind))},
      {"mode", std::string(mode_label(o.mode))},
      {"pruned", o.prune},
      {"trees", t.tree_count},
      {"faux_trees", t.faux_tree_count},
      {"trees_with_mate", t.trees_with_mate_count},
      {"graphs_examined", t.graphs_examined},
      {"classes", classes},
  };
}

int cmd_census(const RunConfig& cfg) {
  CensusOptions o;
  o.n = cfg.n;
  o.kind = kind_from(cfg.matrix);
  auto mode = parse_mode(cfg.mode);
  if (!mode) throw std::invalid_argument("unknown mode '" + cfg.mode + "'");
  o.mode = *mode;
  o.prune = !cfg.no_prune;
  o.threads = cfg.threads;
  const CensusTable table = census(o);
  std::string csv = census_csv_header() + "\n" + census_csv_row(table) + "\n";
  int status = 0;

  // At small n the pruned universe is cross-checked against the full one.
  const bool prunable = o.kind == MatrixKind::Adjacency || o.kind == MatrixKind::NormalizedAdjacency;
  if (o.mode == CensusMode::Brute && o.prune && prunable && o.n <= 7) {
    CensusOptions full = o;
    full.prune = false;
    const CensusTable check = census(full);
    const bool same = check.faux_tree_count == table.faux_tree_count &&
                      check.trees_with_mate_count == table.trees_with_mate_count;
    std::cerr << "unpruned: " << census_csv_row(check) << (same ? " (agrees)" : " (DISAGREES)") << "\n";
    if (!same) status = kExitVerifyFailed;
  }
  emit(cfg, csv);
  if (!cfg.json_out.empty()) {
    std::ofstream f(cfg.json_out);
    if (!f) throw std::runtime_error("cannot open " + cfg.json_out);
    f << census_json(table, o).dump(2) << "\n";
  }
  return status;
}

int cmd_ornament(const RunConfig& cfg) {
  const ExtendedWord w = parse_word(cfg.word);
  const Ornament orn = build_ornamented(w, cfg.p, cfg.q);
  std::vector<PolyMatrix> states;
  const RatPoly transfer = transfer_charpoly(w, cfg.p, cfg.q, cfg.states ? &states : nullptr);
  const RatPoly direct = char_poly(orn.graph, MatrixKind::NormalizedAdjacency).charpoly;
  json out = {
      {"schema", 1},
      {"command", "ornament"},
      {"word", print_word(w)},
      {"p", cfg.p},
      {"q", cfg.q},
      {"graph6", graph6_encode(orn.graph)},
      {"vertices", orn.graph.order()},
      {"is_tree", is_tree(orn.graph)},
      {"direct_charpoly", poly_json(direct)},
      {"transfer_charpoly", poly_json(transfer)},
      {"verdict", direct == transfer ? "equal" : "different"},
  };
  bool ok = direct == transfer;
  if (cfg.states) {
    // post-order over letters; "-" attachment for S, "+" then "-" for D
    json cols = json::array();
    for (const auto& s : states) {
      json col = json::array();
      for (int i = 0; i < s.rows(); ++i) col.push_back(poly_json(s(i, 0)));
      cols.push_back(col);
    }
    out["states"] = cols;
  }
  if (cfg.against_p > 0) {
    const Ornament other = build_ornamented(w, cfg.against_p, cfg.against_q);
    json cert = certificate(orn.graph, other.graph, MatrixKind::NormalizedAdjacency);
    ok = ok && certificate_ok(cert);
    out["comparison"] = cert;
  }
  emit(cfg, out.dump(2) + "\n");
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_verify_u(const RunConfig& cfg, bool single) {
  std::string text;
  bool all = true;
  auto cell = [&](int p, int q) -> std::string {
    if (p + q < 4) return "skip";
    const IntertwinerReport r = verify_intertwiner(p, q);
    all = all && r.ok();
    return r.ok() ? "true" : "false";
  };
  if (single) {
    text = "p=" + std::to_string(cfg.p) + " q=" + std::to_string(cfg.q) + ": " + cell(cfg.p, cfg.q) + "\n";
  } else {
    text = "p\\q";
    for (int q = 2; q <= cfg.q_max; ++q) text += "\t" + std::to_string(q);
    text += "\n";
    for (int p = 1; p <= cfg.p_max; ++p) {
      text += std::to_string(p);
      for (int q = 2; q <= cfg.q_max; ++q) text += "\t" + cell(p, q);
      text += "\n";
    }
  }
  emit(cfg, text);
  return all ? 0 : kExitVerifyFailed;
}

int cmd_limbswap(const RunConfig& cfg) {
  Graph host;
  if (cfg.random_host) {
    std::mt19937_64 rng(cfg.seed);
    host = random_limb_host(cfg.max_vertices, rng);
  } else {
    host = graph6_decode(cfg.graph6);
  }
  if (!is_tree(host)) throw std::invalid_argument("limbswap needs a tree");
  const auto sites = limb_occurrences(host, limb_pair().t1);
  if (sites.empty()) {
    std::cerr << "no occurrence of the limb\n";
    return kExitNoOccurrence;
  }
  const LimbSwap swapped = limb_swap(host, sites.front());
  json cert = certificate(host, swapped.graph, MatrixKind::Adjacency);
  json out = {
      {"schema", 1},
      {"command", "limbswap"},
      {"site", {{"vertex", sites.front().vertex}, {"map", sites.front().map}}},
      {"occurrences", sites.size()},
      {"certificate", cert},
  };
  if (cfg.random_host) out["seed"] = cfg.seed;
  emit(cfg, out.dump(2) + "\n");
  return certificate_ok(cert) && !is_tree(swapped.graph) ? 0 : kExitVerifyFailed;
}

int cmd_qfamily(const RunConfig& cfg) {
  const Graph g = graph6_decode(cfg.graph6);
  const RootedGraph rooted(g, cfg.root);
  const auto [non_tree, tree] = q_attach(rooted);
  json cert = certificate(non_tree, tree, MatrixKind::SignlessLaplacian);
  json out = {
      {"schema", 1},
      {"command", "qfamily"},
      {"rooted", {{"graph6", graph6_encode(g)}, {"root", cfg.root}}},
      {"vertices", non_tree.order()},
      {"certificate", cert},
  };
  emit(cfg, out.dump(2) + "\n");
  return certificate_ok(cert) ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra, faux-tree censuses and cospectral constructions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* trees = app.add_subcommand("trees", "free trees on n vertices as graph6");
  trees->add_option("--n", cfg.n, "vertex count (1..20)")->required();
  trees->add_option("--out", cfg.out, "output file (default stdout)");

  auto* cen = app.add_subcommand("census", "faux-tree census as CSV");
  cen->add_option("--n", cfg.n, "vertex count")->required();
  cen->add_option("--matrix", cfg.matrix, "A, L, Q or NA")->check(CLI::IsMember({"A", "L", "Q", "NA"}));
  cen->add_option("--mode", cfg.mode, "brute or structured")->check(CLI::IsMember({"brute", "structured"}));
  cen->add_option("--out", cfg.out, "CSV file (default stdout)");
  cen->add_option("--json", cfg.json_out, "also write the mixed classes as JSON");
  cen->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  cen->add_flag("--no-prune", cfg.no_prune, "enumerate the full universe");

  auto* orn = app.add_subcommand("ornament", "build a (p,q) ornament and compare both polynomials");
  orn->add_option("--word", cfg.word, "extended word, e.g. \"iSSD((e)*(Se))\"")->required();
  orn->add_option("--p", cfg.p)->check(CLI::PositiveNumber);
  orn->add_option("--q", cfg.q)->check(CLI::Range(2, 31));
  orn->add_option("--against-p", cfg.against_p, "second ornament to certify against");
  orn->add_option("--against-q", cfg.against_q);
  orn->add_flag("--states", cfg.states, "include the 7x1 state column of every letter");
  orn->add_option("--out", cfg.out);

  auto* vu = app.add_subcommand("verify-u", "check the intertwiner identities");
  vu->add_option("--p-max", cfg.p_max);
  vu->add_option("--q-max", cfg.q_max);
  auto* vp = vu->add_option("--p", cfg.p, "check a single (p,q)");
  vu->add_option("--q", cfg.q)->needs(vp);
  vu->add_option("--out", cfg.out);

  auto* ls = app.add_subcommand("limbswap", "swap the tree limb for its non-tree mate");
  auto* g6 = ls->add_option("--graph6", cfg.graph6, "host tree");
  auto* rh = ls->add_flag("--random-host", cfg.random_host, "use a random host built from --seed");
  g6->excludes(rh);
  ls->add_option("--seed", cfg.seed);
  ls->add_option("--max-vertices", cfg.max_vertices)->check(CLI::Range(7, 32));
  ls->add_option("--out", cfg.out);

  auto* qf = app.add_subcommand("qfamily", "attach a rooted graph to the Q base pair");
  qf->add_option("--graph6", cfg.graph6, "rooted graph")->required();
  qf->add_option("--root", cfg.root)->check(CLI::NonNegativeNumber);
  qf->add_option("--out", cfg.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*trees) return cmd_trees(cfg);
    if (*cen) return cmd_census(cfg);
    if (*orn) {
      if ((cfg.against_p > 0) != (cfg.against_q > 0)) {
        throw std::invalid_argument("--against-p and --against-q go together");
      }
      return cmd_ornament(cfg);
    }
    if (*vu) return cmd_verify_u(cfg, vp->count() > 0);
    if (*ls) {
      if (!cfg.random_host && cfg.graph6.empty()) throw std::invalid_argument("give --graph6 or --random-host");
      return cmd_limbswap(cfg);
    }
    if (*qf) return cmd_qfamily(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
