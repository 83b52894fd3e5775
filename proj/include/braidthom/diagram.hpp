#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/braid.hpp"
#include "braidthom/dyadic.hpp"
#include "braidthom/errors.hpp"
#include "braidthom/tree.hpp"

namespace braidthom {

enum class ElementClass { identity, pure_kernel, fbr, vbr };

inline std::string to_string(ElementClass c) {
  switch (c) {
    case ElementClass::identity: return "identity";
    case ElementClass::pure_kernel: return "Pbr";
    case ElementClass::fbr: return "Fbr";
    case ElementClass::vbr: return "Vbr";
  }
  return "?";
}

/// The four character values of an element with pure braid, in the order
/// (phi0, phi1, omega0, omega1): log slope at 0, minus log slope at 1, and
/// the two cloning-invariant winding measurements.
struct Characters {
  std::int64_t phi0 = 0;
  std::int64_t phi1 = 0;
  std::int64_t omega0 = 0;
  std::int64_t omega1 = 0;

  friend Characters operator+(const Characters& a, const Characters& b) {
    return {a.phi0 + b.phi0, a.phi1 + b.phi1, a.omega0 + b.omega0, a.omega1 + b.omega1};
  }
  friend bool operator==(const Characters& a, const Characters& b) {
    return a.phi0 == b.phi0 && a.phi1 == b.phi1 && a.omega0 == b.omega0 && a.omega1 == b.omega1;
  }
  std::string str() const {
    return "(" + std::to_string(phi0) + "," + std::to_string(phi1) + "," +
           std::to_string(omega0) + "," + std::to_string(omega1) + ")";
  }
};

/// Braided paired tree diagram (T-, b, T+): splits on top, braid, merges
/// below, all with matching arity. Group elements are equivalence classes
/// under expansion and reduction; equality is decided exactly.
///
/// The product g*h stacks g's picture above h's. As a map of [0,1] the
/// element sends the bottom tree's subdivision to the top tree's, so
/// products compose like functions.
class Diagram {
public:
  Diagram(Tree top, BraidWord braid, Tree bottom)
      : top_(std::move(top)), braid_(std::move(braid)), bottom_(std::move(bottom)) {
    if (top_.leaf_count() != braid_.strands() || bottom_.leaf_count() != braid_.strands())
      throw std::invalid_argument("tree leaf counts must match braid strands");
  }

  static Diagram identity(const Tree& t = Tree::leaf()) {
    return Diagram(t, BraidWord::identity(t.leaf_count()), t);
  }

  /// (T, full twist, T): the image of the center of the pure braid group on
  /// the tree T. Commutes with every diagram (T, p, T) on the same tree.
  static Diagram central_twist(const Tree& t) {
    return Diagram(t, BraidWord::full_twist(t.leaf_count()), t);
  }

  const Tree& top() const { return top_; }
  const Tree& bottom() const { return bottom_; }
  const BraidWord& braid() const { return braid_; }
  int strands() const { return braid_.strands(); }

  /// Expansion at bottom leaf k: adds a caret to leaf k of the bottom tree,
  /// clones strand k, and adds a caret to the top tree at the strand's top
  /// endpoint. The result represents the same group element.
  Diagram expand(int k) const {
    if (k < 1 || k > strands()) throw std::invalid_argument("expansion index out of range");
    const int kt = braid_.permutation()(k);
    return Diagram(top_.attach_caret(kt), braid_.clone(k), bottom_.attach_caret(k));
  }

  /// Iterated expansion along a forest on the bottom tree.
  Diagram expand_bottom(const Forest& f) const {
    Diagram d = *this;
    for (int k : f.carets()) d = d.expand(k);
    return d;
  }

  /// Iterated expansion putting the forest's carets on the top tree.
  Diagram expand_top(const Forest& f) const {
    Diagram d = *this;
    for (int j : f.carets()) d = d.expand(d.braid_.permutation().inverse()(j));
    return d;
  }

  Diagram inverse() const { return Diagram(bottom_, braid_.inverse(), top_); }

  friend Diagram operator*(const Diagram& g, const Diagram& h) {
    auto [phi, psi] = common_refinement(g.bottom_, h.top_);
    Diagram ge = g.expand_bottom(phi);
    Diagram he = h.expand_top(psi);
    return Diagram(std::move(ge.top_), ge.braid_ * he.braid_, std::move(he.bottom_));
  }

  /// Every representative of the identity has equal trees and trivial braid,
  /// which makes both the identity test and equality exact.
  bool is_identity() const { return top_ == bottom_ && braid_.is_trivial(); }

  /// Greedily undoes expansions: finds a bottom caret over a clone pair
  /// whose top endpoints also form a caret, removes it, and repeats.
  Diagram reduce() const {
    Diagram d = *this;
    bool again = true;
    while (again && d.strands() > 1) {
      again = false;
      const Permutation perm = d.braid_.permutation();
      const int n = d.strands();
      for (int k = 1; k < n; ++k) {
        if (!d.bottom_.leaves_form_caret(k)) continue;
        const int jt = perm(k);
        if (perm(k + 1) != jt + 1) continue;
        if (!d.top_.leaves_form_caret(jt)) continue;
        std::vector<int> keep;
        keep.reserve(static_cast<std::size_t>(n - 1));
        for (int s = 1; s <= n; ++s)
          if (s != k + 1) keep.push_back(s);
        BraidWord dropped = d.braid_.delete_strands(keep);
        if (!braidthom::equal(d.braid_, dropped.clone(k))) continue;
        d = Diagram(d.top_.remove_caret(jt), std::move(dropped), d.bottom_.remove_caret(k));
        again = true;
        break;
      }
    }
    return d;
  }

  /// Most specific class: elements with pure braids lie in Fbr; among those,
  /// equal-tree representatives characterize the kernel of the map onto F
  /// (every representative of a kernel element has equal trees).
  ElementClass classify() const {
    if (!braid_.is_pure()) return ElementClass::vbr;
    if (top_ == bottom_)
      return braid_.is_trivial() ? ElementClass::identity : ElementClass::pure_kernel;
    return ElementClass::fbr;
  }

  /// (phi0, phi1, omega0, omega1). phi0 and phi1 are the log slopes of the
  /// F-image at 0 and 1 (the latter negated, so that the four values are
  /// dual to the standard basis of the abelianization); omega0 and omega1
  /// come from the braid windings. Requires a pure braid.
  Characters characters() const {
    if (!braid_.is_pure()) throw std::invalid_argument("characters require a pure braid");
    const WindingData w = braid_.winding();
    return {static_cast<std::int64_t>(bottom_.left_depth()) - top_.left_depth(),
            static_cast<std::int64_t>(top_.right_depth()) - bottom_.right_depth(),
            w.outer, w.adjacent_sum};
  }

  /// Essential endpoints of an equal-tree pure representative: interior
  /// subdivision points whose flanking strands are not clones. Invariant
  /// under expansion, and empty exactly on the identity.
  std::vector<Dyadic> essential_points() const {
    const ElementClass c = classify();
    if (c != ElementClass::pure_kernel && c != ElementClass::identity)
      throw std::invalid_argument("essential points require an equal-tree pure representative");
    std::vector<Dyadic> out;
    const auto intervals = top_.leaf_intervals();
    const int n = strands();
    for (int i = 1; i < n; ++i) {
      std::vector<int> keep;
      keep.reserve(static_cast<std::size_t>(n - 1));
      for (int s = 1; s <= n; ++s)
        if (s != i + 1) keep.push_back(s);
      const bool clones = braidthom::equal(braid_, braid_.delete_strands(keep).clone(i));
      if (!clones) out.push_back(intervals[static_cast<std::size_t>(i)].lo());
    }
    return out;
  }

  /// The self-map of the kernel that keeps only what happens over the left
  /// child of the root: (T, p, T) -> (T_L, p restricted to the first
  /// leaves(T_L) strands, T_L). A surjective, non-injective homomorphism.
  Diagram left_restriction() const {
    const ElementClass c = classify();
    if (c != ElementClass::pure_kernel && c != ElementClass::identity)
      throw std::invalid_argument("left restriction requires an equal-tree pure representative");
    if (top_.is_leaf()) throw std::invalid_argument("trivial tree has no left subtree");
    const Tree& tl = top_.left();
    return Diagram(tl, braid_.keep_prefix(tl.leaf_count()), tl);
  }

  /// The induced map of [0,1]: sends the bottom subdivision affinely onto
  /// the top subdivision. Depends only on the trees.
  Dyadic act(const Dyadic& x) const {
    if (x < Dyadic::zero() || x > Dyadic::one())
      throw std::invalid_argument("point outside [0,1]");
    const auto dom = bottom_.leaf_intervals();
    const auto rng = top_.leaf_intervals();
    for (std::size_t k = 0; k < dom.size(); ++k) {
      if (x <= dom[k].hi()) {
        const Dyadic offset = x - dom[k].lo();
        return rng[k].lo() + offset.scaled_pow2(dom[k].log_den - rng[k].log_den);
      }
    }
    return Dyadic::one();
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.braid_ == b.braid_;
  }

  /// Text form: top-tree|braid|bottom-tree, e.g. ((••)•)|B3:1,1|((••)•).
  std::string str() const { return top_.str() + "|" + braid_.str() + "|" + bottom_.str(); }

  static Diagram parse(std::string_view text) {
    const std::size_t p1 = text.find('|');
    if (p1 == std::string_view::npos) throw ParseError("expected 'top|braid|bottom'", text.size());
    const std::size_t p2 = text.find('|', p1 + 1);
    if (p2 == std::string_view::npos) throw ParseError("expected second '|'", text.size());
    Tree top = Tree::parse(text.substr(0, p1));
    Tree bottom = Tree::parse(text.substr(p2 + 1));
    if (top.leaf_count() != bottom.leaf_count())
      throw ParseError("tree leaf counts differ", p2 + 1);
    BraidWord braid = BraidWord::parse(text.substr(p1 + 1, p2 - p1 - 1), top.leaf_count());
    if (braid.strands() != top.leaf_count())
      throw ParseError("braid strand count does not match trees", p1 + 1);
    return Diagram(std::move(top), std::move(braid), std::move(bottom));
  }

private:
  Tree top_;
  BraidWord braid_;
  Tree bottom_;
};

/// Exact equality of group elements.
inline bool equal(const Diagram& g, const Diagram& h) { return (g * h.inverse()).is_identity(); }

inline Diagram commutator(const Diagram& a, const Diagram& b) {
  return a * b * a.inverse() * b.inverse();
}

inline bool commute(const Diagram& a, const Diagram& b) {
  return commutator(a, b).is_identity();
}

}  // namespace braidthom
