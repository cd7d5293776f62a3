#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fauxtree/graph.hpp"
#include "fauxtree/spectra.hpp"

namespace fauxtree {

enum class CensusMode { Brute, Structured };

std::string_view mode_label(CensusMode mode);
std::optional<CensusMode> parse_mode(std::string_view label);

class CensusError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graphs sharing one exact characteristic polynomial. Only classes holding
/// at least one tree are kept; members are canonical graphs, sorted.
struct SpectralClass {
  std::string key;  ///< coefficient list, low to high, comma separated
  RatPoly charpoly;
  std::vector<Graph> trees;
  std::vector<Graph> non_trees;

  bool mixed() const { return !trees.empty() && !non_trees.empty(); }
};

struct CensusOptions {
  int n = 4;
  MatrixKind kind = MatrixKind::Adjacency;
  CensusMode mode = CensusMode::Brute;
  /// Restrict the brute universe by a spectral pruning fact: n-1 edges for
  /// A, connected graphs for the normalized adjacency. L and Q always use
  /// n-1 edges (the trace forces it).
  bool prune = true;
  int threads = 1;
};

struct CensusTable {
  int n = 0;
  MatrixKind kind = MatrixKind::Adjacency;
  long tree_count = 0;
  long faux_tree_count = 0;        ///< non-tree classes sharing a spectrum with a tree
  long trees_with_mate_count = 0;  ///< tree classes sharing a spectrum with a non-tree
  long graphs_examined = 0;        ///< size of the candidate universe
  std::vector<SpectralClass> classes;  ///< sorted by key

  /// Recomputes both faux counts from `classes`.
  std::pair<long, long> recount() const;
};

/// Brute mode: n <= 10 over the universe described in CensusOptions::prune.
/// Structured mode: signless Laplacian only, candidates from q_candidates().
CensusTable census(const CensusOptions& options);

/// Stable key of a polynomial, used to group classes.
std::string spectral_key(const RatPoly& p);

/// "n,kind,trees,faux_trees,trees_with_mate"
std::string census_csv_header();
std::string census_csv_row(const CensusTable& t);

}  // namespace fauxtree
