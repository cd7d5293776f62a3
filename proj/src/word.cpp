#include "fauxtree/word.hpp"

#include <algorithm>
#include <functional>

namespace fauxtree {

int WordTree::letters() const {
  int k = 1;
  for (const auto& c : children_) k += c.letters();
  return k;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += ", ";
    s += "'" + expected[i] + "'";
  }
  return s;
}

constexpr std::string_view kTensorGlyph = "\xE2\x8A\x97";

class Parser {
 public:
  Parser(std::string_view text, bool lenient) : text_(text), lenient_(lenient) {}

  ExtendedWord parse() {
    expect('i');
    ExtendedWord w{word()};
    skip_space();
    if (pos_ != text_.size()) fail({"end of input"});
    return w;
  }

 private:
  WordTree word() {
    skip_space();
    if (pos_ < text_.size()) {
      switch (text_[pos_]) {
        case 'e': ++pos_; return WordTree::end();
        case 'S': ++pos_; return WordTree::single(word());
        case 'D': {
          ++pos_;
          expect('(');
          expect('(');
          WordTree plus = word();
          expect(')');
          tensor();
          expect('(');
          WordTree minus = word();
          expect(')');
          expect(')');
          return WordTree::twin(std::move(plus), std::move(minus));
        }
        default: break;
      }
    }
    fail({"e", "S", "D"});
  }

  void tensor() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      return;
    }
    if (lenient_ && text_.substr(pos_, kTensorGlyph.size()) == kTensorGlyph) {
      pos_ += kTensorGlyph.size();
      return;
    }
    fail(lenient_ ? std::vector<std::string>{"*", std::string(kTensorGlyph)}
                  : std::vector<std::string>{"*"});
  }

  void expect(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return;
    }
    fail({std::string(1, c)});
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'"
                                            : std::string("end of input");
    throw WordParseError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  bool lenient_;
  std::size_t pos_ = 0;
};

}  // namespace

WordParseError::WordParseError(std::size_t position, std::vector<std::string> expected,
                               const std::string& found)
    : std::invalid_argument("word parse error at position " + std::to_string(position) +
                            ": expected " + join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

ExtendedWord parse_word(std::string_view text, bool lenient) {
  return Parser(text, lenient).parse();
}

std::string print_word(const WordTree& w) {
  switch (w.kind()) {
    case WordTree::Kind::End: return "e";
    case WordTree::Kind::Single: return "S" + print_word(w.children()[0]);
    case WordTree::Kind::Double:
      return "D((" + print_word(w.children()[0]) + ")*(" + print_word(w.children()[1]) + "))";
  }
  return {};
}

std::string print_word(const ExtendedWord& w) { return "i" + print_word(w.body); }

// ---------------------------------------------------------------------------
// Trees and words

ExtendedWord word_of_tree(const RootedGraph& t) {
  const Graph& g = t.graph;
  if (!is_tree(g)) throw WordError("word_of_tree: not a tree");
  if (g.order() < 3) throw WordError("word_of_tree: needs at least three vertices");
  const int n = g.order();
  std::vector<std::vector<int>> kids(n);
  std::vector<int> order{t.root}, parent(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    VertexSet s = g.neighbors(v);
    while (s) {
      const int u = std::countr_zero(s);
      s &= s - 1;
      if (u == parent[v]) continue;
      parent[u] = v;
      kids[v].push_back(u);
      order.push_back(u);
    }
    if (kids[v].size() != 0 && kids[v].size() != 2) {
      throw WordError("word_of_tree: vertex " + std::to_string(v) + " has " +
                      std::to_string(kids[v].size()) + " children");
    }
  }
  // Rooted canonical codes, bottom-up.
  std::vector<std::string> code(n);
  std::vector<int> size(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> parts;
    for (int c : kids[*it]) {
      parts.push_back(code[c]);
      size[*it] += size[c];
    }
    std::sort(parts.begin(), parts.end());
    code[*it] = "(";
    for (const auto& s : parts) code[*it] += s;
    code[*it] += ")";
  }
  std::function<WordTree(int)> build = [&](int v) {
    int a = kids[v][0], b = kids[v][1];
    const bool leaf_a = kids[a].empty(), leaf_b = kids[b].empty();
    if (leaf_a && leaf_b) return WordTree::end();
    if (leaf_a) return WordTree::single(build(b));
    if (leaf_b) return WordTree::single(build(a));
    if (std::tie(size[b], code[b]) < std::tie(size[a], code[a])) std::swap(a, b);
    return WordTree::twin(build(a), build(b));
  };
  return ExtendedWord{build(t.root)};
}

RootedGraph tree_of_word(const ExtendedWord& w) {
  std::vector<Graph::Edge> edges;
  int next = 1;
  std::function<void(const WordTree&, int)> grow = [&](const WordTree& node, int v) {
    const int plus = next++, minus = next++;
    edges.emplace_back(v, plus);
    edges.emplace_back(v, minus);
    switch (node.kind()) {
      case WordTree::Kind::End: break;
      case WordTree::Kind::Single: grow(node.children()[0], minus); break;
      case WordTree::Kind::Double:
        grow(node.children()[0], plus);
        grow(node.children()[1], minus);
        break;
    }
  };
  grow(w.body, 0);
  return RootedGraph(Graph::from_edges(next, edges), 0);
}

std::vector<WordTree> all_words(int letters) {
  if (letters < 1) throw WordError("all_words: needs at least one letter");
  if (letters == 1) return {WordTree::end()};
  std::vector<WordTree> out;
  for (const auto& w : all_words(letters - 1)) out.push_back(WordTree::single(w));
  for (int i = 1; i <= letters - 2; ++i) {
    const auto left = all_words(i);
    const auto right = all_words(letters - 1 - i);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back(WordTree::twin(a, b));
  }
  return out;
}

}  // namespace fauxtree
