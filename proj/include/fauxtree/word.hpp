#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fauxtree/graph.hpp"
#include "fauxtree/matrix.hpp"
#include "fauxtree/polynomial.hpp"

namespace fauxtree {

/// A word for a full binary tree. Each letter is one vertex with two
/// children: End has two leaf children, Single one leaf and one subtree
/// (the subtree hangs off the "-" child), Double two subtrees ("+" first).
class WordTree {
 public:
  enum class Kind { End, Single, Double };

  static WordTree end() { return WordTree(Kind::End, {}); }
  static WordTree single(WordTree child) { return WordTree(Kind::Single, {std::move(child)}); }
  static WordTree twin(WordTree plus, WordTree minus) {
    return WordTree(Kind::Double, {std::move(plus), std::move(minus)});
  }

  Kind kind() const { return kind_; }
  const std::vector<WordTree>& children() const { return children_; }
  /// Number of letters, i.e. vertices of the tree that have children.
  int letters() const;

  friend bool operator==(const WordTree&, const WordTree&) = default;

 private:
  WordTree(Kind kind, std::vector<WordTree> children)
      : kind_(kind), children_(std::move(children)) {}

  Kind kind_ = Kind::End;
  std::vector<WordTree> children_;
};

/// The word prefixed by "i".
struct ExtendedWord {
  WordTree body = WordTree::end();
  friend bool operator==(const ExtendedWord&, const ExtendedWord&) = default;
};

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Grammar: i W, with W ::= e | S W | D((W)*(W)). Whitespace is ignored.
/// In lenient mode the UTF-8 glyph for the tensor product is accepted for "*".
ExtendedWord parse_word(std::string_view text, bool lenient = true);
std::string print_word(const ExtendedWord& w);
std::string print_word(const WordTree& w);

class WordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Word of a rooted full binary tree with at least three vertices. Twin
/// subtrees are ordered by (size, rooted canonical code), smaller first.
ExtendedWord word_of_tree(const RootedGraph& t);

/// The rooted full binary tree described by a word (root = vertex 0).
RootedGraph tree_of_word(const ExtendedWord& w);

/// Every word with exactly `letters` letters; both orders of unequal twins
/// are produced, so each full binary tree appears at least once.
std::vector<WordTree> all_words(int letters);

/// Exact polynomial matrices of the transfer system for (p, q).
/// States: 0 no edge, 1 edge avoiding the parent and both children,
/// 2 "+" only, 3 "-" only, 4 parent only, 5 parent and "+", 6 parent and "-".
struct TransferMatrixSet {
  int p = 0, q = 0;
  PolyMatrix i_row;  ///< 1 x 7
  PolyMatrix s_mat;  ///< 7 x 7
  PolyMatrix d_mat;  ///< 7 x 49, column index = 7 * (+ state) + (- state)
  PolyMatrix e_col;  ///< 7 x 1
  std::vector<int> e{1, 1, 1, 1, 1, 1, 1};
  std::vector<int> t{1, 1, 1, 1, 0, 0, 0};
};

TransferMatrixSet transfer_matrices(int p, int q);

/// Evaluates the word bottom-up against the transfer system. When `states`
/// is given, the 7 x 1 column of every letter is appended in post-order.
RatPoly transfer_charpoly(const ExtendedWord& w, int p, int q,
                          std::vector<PolyMatrix>* states = nullptr);

/// The 7 x 7 rational intertwiner for (p, q); requires p + q >= 4.
RatMatrix intertwiner(int p, int q);

struct IntertwinerReport {
  bool u1 = false;  ///< i_{1,p+q-1} = i_{p,q} U
  bool u2 = false;  ///< U S_{1,p+q-1} = S_{p,q} U
  bool u3 = false;  ///< U D_{1,p+q-1} = D_{p,q} (U kron U)
  bool u4 = false;  ///< U e_{1,p+q-1} = e_{p,q}
  bool ok() const { return u1 && u2 && u3 && u4; }
};

IntertwinerReport verify_intertwiner(int p, int q);

}  // namespace fauxtree
