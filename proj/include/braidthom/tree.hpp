#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidthom/dyadic.hpp"
#include "braidthom/errors.hpp"

namespace braidthom {

namespace detail {
struct TreeNode;
}

/// Rooted binary tree, immutable and cheap to copy (nodes are shared).
/// A tree with n leaves indexes the dyadic subdivision of [0,1] into n
/// intervals, leaf 1 leftmost. Canonical text form: leaf = "•",
/// internal node = "(" left right ")".
class Tree {
public:
  Tree() = default;  // the trivial tree (a single leaf)

  static Tree leaf() { return Tree(); }
  static Tree caret(Tree left, Tree right);

  /// All-right tree with n leaves: every caret hangs on the previous
  /// caret's right leaf.
  static Tree all_right(int n) {
    if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
    Tree t = leaf();
    for (int i = 1; i < n; ++i) t = caret(leaf(), t);
    return t;
  }

  bool is_leaf() const { return node_ == nullptr; }
  const Tree& left() const;
  const Tree& right() const;
  int leaf_count() const;

  /// Edge-path length from the root to the leftmost leaf. Zero on the
  /// trivial tree.
  int left_depth() const {
    int d = 0;
    for (const Tree* t = this; !t->is_leaf(); t = &t->left()) ++d;
    return d;
  }
  /// Edge-path length from the root to the rightmost leaf.
  int right_depth() const {
    int d = 0;
    for (const Tree* t = this; !t->is_leaf(); t = &t->right()) ++d;
    return d;
  }

  friend bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() || b.is_leaf()) return false;
    if (a.leaf_count() != b.leaf_count()) return false;
    return a.left() == b.left() && a.right() == b.right();
  }
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

  /// The leaf subdivision of [0,1], left to right.
  std::vector<DyadicInterval> leaf_intervals() const {
    std::vector<DyadicInterval> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    collect_intervals(*this, DyadicInterval::whole(), out);
    return out;
  }

  /// Replaces leaf k (1-based) by a caret.
  Tree attach_caret(int k) const { return replace_leaf(k, caret(leaf(), leaf())); }

  /// Replaces leaf k (1-based) by the given subtree.
  Tree replace_leaf(int k, const Tree& sub) const {
    if (k < 1 || k > leaf_count()) throw std::invalid_argument("leaf index out of range");
    if (is_leaf()) return sub;
    const int nl = left().leaf_count();
    if (k <= nl) return caret(left().replace_leaf(k, sub), right());
    return caret(left(), right().replace_leaf(k - nl, sub));
  }

  /// True if leaves k and k+1 are the two children of a single caret.
  bool leaves_form_caret(int k) const {
    if (k < 1 || k + 1 > leaf_count()) return false;
    const Tree* t = this;
    while (true) {
      if (t->is_leaf()) return false;
      if (t->leaf_count() == 2) return k == 1;
      const int nl = t->left().leaf_count();
      if (k + 1 <= nl) {
        t = &t->left();
      } else if (k > nl) {
        k -= nl;
        t = &t->right();
      } else {
        return false;  // the pair straddles this node's split
      }
    }
  }

  /// Collapses the caret whose children are leaves k and k+1 back to a leaf.
  Tree remove_caret(int k) const {
    if (!leaves_form_caret(k)) throw std::invalid_argument("leaves do not form a caret");
    if (leaf_count() == 2) return leaf();
    const int nl = left().leaf_count();
    if (k + 1 <= nl) return caret(left().remove_caret(k), right());
    return caret(left(), right().remove_caret(k - nl));
  }

  /// True if this tree can be obtained from `base` by attaching carets.
  bool refines(const Tree& base) const {
    if (base.is_leaf()) return true;
    if (is_leaf()) return false;
    return left().refines(base.left()) && right().refines(base.right());
  }

  std::string str() const {
    std::string out;
    write(*this, out);
    return out;
  }

  static Tree parse(std::string_view text);

private:
  explicit Tree(std::shared_ptr<const detail::TreeNode> node) : node_(std::move(node)) {}

  const detail::TreeNode& require_caret() const;

  static void collect_intervals(const Tree& t, DyadicInterval span,
                                std::vector<DyadicInterval>& out) {
    if (t.is_leaf()) {
      out.push_back(span);
      return;
    }
    collect_intervals(t.left(), span.left_half(), out);
    collect_intervals(t.right(), span.right_half(), out);
  }

  static void write(const Tree& t, std::string& out) {
    if (t.is_leaf()) {
      out += "•";
      return;
    }
    out += '(';
    write(t.left(), out);
    write(t.right(), out);
    out += ')';
  }

  std::shared_ptr<const detail::TreeNode> node_;
};

namespace detail {
struct TreeNode {
  TreeNode(Tree l, Tree r)
      : left(std::move(l)), right(std::move(r)), leaves(left.leaf_count() + right.leaf_count()) {}
  Tree left;
  Tree right;
  int leaves;
};
}  // namespace detail

inline Tree Tree::caret(Tree left, Tree right) {
  return Tree(std::make_shared<const detail::TreeNode>(std::move(left), std::move(right)));
}
inline const detail::TreeNode& Tree::require_caret() const {
  if (!node_) throw std::logic_error("trivial tree has no subtrees");
  return *node_;
}
inline const Tree& Tree::left() const { return require_caret().left; }
inline const Tree& Tree::right() const { return require_caret().right; }
inline int Tree::leaf_count() const { return node_ ? node_->leaves : 1; }

namespace detail {

inline std::size_t skip_ws(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
    ++pos;
  return pos;
}

inline Tree parse_tree_at(std::string_view s, std::size_t& pos) {
  pos = skip_ws(s, pos);
  if (pos >= s.size()) throw ParseError("unexpected end of tree expression", pos);
  if (s[pos] == '.') {
    ++pos;
    return Tree::leaf();
  }
  // UTF-8 bullet U+2022
  if (s.substr(pos, 3) == "•") {
    pos += 3;
    return Tree::leaf();
  }
  if (s[pos] == '(') {
    ++pos;
    Tree l = parse_tree_at(s, pos);
    Tree r = parse_tree_at(s, pos);
    pos = skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    return Tree::caret(std::move(l), std::move(r));
  }
  throw ParseError("expected leaf or '('", pos);
}

}  // namespace detail

inline Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = detail::parse_tree_at(text, pos);
  pos = detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
  return t;
}

/// Ordered union of carets with a fixed number of roots. Stored normalized
/// as one subtree per root, so two caret sequences denoting the same forest
/// compare equal. Attaching the forest to an n-leaf tree grafts subtree i
/// onto leaf i.
class Forest {
public:
  explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    if (trees_.empty()) throw std::invalid_argument("forest needs at least one root");
  }

  static Forest trivial(int roots) {
    return Forest(std::vector<Tree>(static_cast<std::size_t>(roots)));
  }

  /// Builds the forest lambda_{k_1} u ... u lambda_{k_r}: caret i is attached
  /// to leaf k_i of the partially built forest, so 1 <= k_i <= roots + (i-1).
  static Forest from_carets(int roots, std::span<const int> ks) {
    if (roots < 1) throw std::invalid_argument("forest needs at least one root");
    std::vector<Tree> trees(static_cast<std::size_t>(roots));
    int leaves = roots;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const int k = ks[i];
      if (k < 1 || k > leaves)
        throw std::invalid_argument("caret index " + std::to_string(k) +
                                    " invalid at step " + std::to_string(i + 1));
      int offset = k;
      for (auto& t : trees) {
        const int c = t.leaf_count();
        if (offset <= c) {
          t = t.attach_caret(offset);
          break;
        }
        offset -= c;
      }
      ++leaves;
    }
    return Forest(std::move(trees));
  }

  int roots() const { return static_cast<int>(trees_.size()); }
  int leaf_count() const {
    int n = 0;
    for (const auto& t : trees_) n += t.leaf_count();
    return n;
  }
  int caret_count() const { return leaf_count() - roots(); }
  bool is_trivial() const {
    return std::all_of(trees_.begin(), trees_.end(), [](const Tree& t) { return t.is_leaf(); });
  }

  /// Subtree grafted onto root i (1-based).
  const Tree& tree(int i) const { return trees_.at(static_cast<std::size_t>(i - 1)); }

  /// Canonical caret sequence (preorder within each root, roots left to
  /// right). from_carets(roots(), carets()) reproduces the forest.
  std::vector<int> carets() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(caret_count()));
    int base = 1;
    for (const auto& t : trees_) {
      emit_carets(t, base, out);
      base += t.leaf_count();
    }
    return out;
  }

  friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
  friend bool operator!=(const Forest& a, const Forest& b) { return !(a == b); }

private:
  // Carets needed to grow tree t out of the leaf currently at position pos;
  // returns with pos advanced past t's leaves.
  static void emit_carets(const Tree& t, int pos, std::vector<int>& out) {
    if (t.is_leaf()) return;
    out.push_back(pos);
    emit_carets(t.left(), pos, out);
    emit_carets(t.right(), pos + t.left().leaf_count(), out);
  }

  std::vector<Tree> trees_;
};

/// Grafts forest f onto t leaf by leaf. Requires f.roots() == t.leaf_count().
inline Tree attach(const Tree& t, const Forest& f) {
  if (f.roots() != t.leaf_count())
    throw std::invalid_argument("forest root count does not match leaf count");
  Tree out = t;
  // Walk leaves right to left so earlier indices stay valid.
  for (int i = f.roots(); i >= 1; --i)
    if (!f.tree(i).is_leaf()) out = out.replace_leaf(i, f.tree(i));
  return out;
}

/// Leafwise union: the smallest tree refining both arguments.
inline Tree tree_union(const Tree& a, const Tree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return Tree::caret(tree_union(a.left(), b.left()), tree_union(a.right(), b.right()));
}

/// The forest F with attach(base, F) == refined. Requires refined.refines(base).
inline Forest completion(const Tree& base, const Tree& refined) {
  std::vector<Tree> trees;
  trees.reserve(static_cast<std::size_t>(base.leaf_count()));
  auto walk = [&](auto&& self, const Tree& b, const Tree& r) -> void {
    if (b.is_leaf()) {
      trees.push_back(r);
      return;
    }
    if (r.is_leaf()) throw std::invalid_argument("tree does not refine the base");
    self(self, b.left(), r.left());
    self(self, b.right(), r.right());
  };
  walk(walk, base, refined);
  return Forest(std::move(trees));
}

/// Minimal common refinement: forests (Phi, Psi) with
/// attach(t, Phi) == attach(s, Psi) the leafwise union of t and s.
inline std::pair<Forest, Forest> common_refinement(const Tree& t, const Tree& s) {
  const Tree u = tree_union(t, s);
  return {completion(t, u), completion(s, u)};
}

/// Longest root-to-leaf edge path.
inline int tree_height(const Tree& t) {
  if (t.is_leaf()) return 0;
  return 1 + std::max(tree_height(t.left()), tree_height(t.right()));
}

/// All binary trees with exactly n leaves, in a deterministic order.
inline std::vector<Tree> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one leaf");
  if (n == 1) return {Tree::leaf()};
  std::vector<Tree> out;
  for (int k = 1; k < n; ++k)
    for (const auto& l : all_trees(k))
      for (const auto& r : all_trees(n - k)) out.push_back(Tree::caret(l, r));
  return out;
}

/// Smallest tree whose subdivision has every point of `cuts` among its
/// endpoints. Cuts must be dyadic and strictly inside (0,1).
inline Tree tree_with_cuts(const std::set<Dyadic>& cuts) {
  for (const auto& c : cuts)
    if (c <= Dyadic::zero() || c >= Dyadic::one())
      throw std::invalid_argument("cut point outside (0,1)");
  auto build = [&](auto&& self, const DyadicInterval& span) -> Tree {
    auto it = cuts.upper_bound(span.lo());
    if (it == cuts.end() || !(*it < span.hi())) return Tree::leaf();
    return Tree::caret(self(self, span.left_half()), self(self, span.right_half()));
  };
  return build(build, DyadicInterval::whole());
}

/// Smallest tree having `target` as one of its leaf intervals; returns the
/// tree and the 1-based index of that leaf.
inline std::pair<Tree, int> tree_with_leaf(const DyadicInterval& target) {
  auto build = [&](auto&& self, const DyadicInterval& span, int base) -> std::pair<Tree, int> {
    if (span == target) return {Tree::leaf(), base};
    if (!span.contains(target)) throw std::logic_error("target interval left the span");
    if (target.hi() <= span.mid()) {
      auto [l, idx] = self(self, span.left_half(), base);
      return {Tree::caret(std::move(l), Tree::leaf()), idx};
    }
    auto [r, idx] = self(self, span.right_half(), base + 1);
    return {Tree::caret(Tree::leaf(), std::move(r)), idx};
  };
  return build(build, DyadicInterval::whole(), 1);
}

}  // namespace braidthom
