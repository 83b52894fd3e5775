#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/diagram.hpp"

namespace braidthom {

/// One generator of the infinite presentations, optionally inverted.
/// x_i (i >= 0) generate the braid-free copy of F; sigma_i and tau_i
/// (i >= 1) generate the rest of Vbr; alpha_{i,j} and beta_{i,j}
/// (1 <= i < j) are the pure generators used for Fbr.
struct GenSymbol {
  enum class Kind { x, sigma, tau, alpha, beta };

  Kind kind = Kind::x;
  int i = 0;
  int j = 0;  // used by alpha/beta only
  int exponent = 1;

  GenSymbol inverse() const {
    GenSymbol s = *this;
    s.exponent = -s.exponent;
    return s;
  }

  std::string str() const {
    std::string base;
    switch (kind) {
      case Kind::x: base = "x" + std::to_string(i); break;
      case Kind::sigma: base = "s" + std::to_string(i); break;
      case Kind::tau: base = "t" + std::to_string(i); break;
      case Kind::alpha: base = "a" + std::to_string(i) + "," + std::to_string(j); break;
      case Kind::beta: base = "b" + std::to_string(i) + "," + std::to_string(j); break;
    }
    return exponent == 1 ? base : base + "^-1";
  }

  friend bool operator==(const GenSymbol& a, const GenSymbol& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.exponent == b.exponent;
  }
};

inline GenSymbol gen_x(int i) {
  if (i < 0) throw std::invalid_argument("x index must be >= 0");
  return {GenSymbol::Kind::x, i, 0, 1};
}
inline GenSymbol gen_sigma(int i) {
  if (i < 1) throw std::invalid_argument("sigma index must be >= 1");
  return {GenSymbol::Kind::sigma, i, 0, 1};
}
inline GenSymbol gen_tau(int i) {
  if (i < 1) throw std::invalid_argument("tau index must be >= 1");
  return {GenSymbol::Kind::tau, i, 0, 1};
}
inline GenSymbol gen_alpha(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("alpha needs 1 <= i < j");
  return {GenSymbol::Kind::alpha, i, j, 1};
}
inline GenSymbol gen_beta(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("beta needs 1 <= i < j");
  return {GenSymbol::Kind::beta, i, j, 1};
}
inline GenSymbol inv(GenSymbol s) { return s.inverse(); }

using GenWord = std::vector<GenSymbol>;

inline GenWord inverse(const GenWord& w) {
  GenWord out(w.rbegin(), w.rend());
  for (auto& s : out) s = s.inverse();
  return out;
}

namespace detail {

// x_0 sends [0,1/2] to [0,1/4]: domain (bottom) tree (•(••)),
// range (top) tree ((••)•).
inline Tree x0_top_pattern() {
  return Tree::caret(Tree::caret(Tree::leaf(), Tree::leaf()), Tree::leaf());
}
inline Tree x0_bottom_pattern() {
  return Tree::caret(Tree::leaf(), Tree::caret(Tree::leaf(), Tree::leaf()));
}

// Strand i loops once around strand j and returns to its position:
// bottom-to-top letters -i, ..., -(j-2), +(j-1), +(j-1), +(j-2), ..., +i.
inline BraidWord loop_braid(int i, int j, int strands) {
  std::vector<int> w;
  for (int k = i; k <= j - 2; ++k) w.push_back(-k);
  w.push_back(j - 1);
  w.push_back(j - 1);
  for (int k = j - 2; k >= i; --k) w.push_back(k);
  return BraidWord(strands, std::move(w));
}

}  // namespace detail

/// Concrete diagram for a presentation generator. The x_i are braid-free;
/// sigma_i lives on the all-right tree with i+2 leaves and leaves the last
/// strand alone, tau_i lives on i+1 leaves and uses the last strand;
/// alpha_{i,j} and beta_{i,j} are the pure loops of strand i around
/// strand j on all-right trees with j+1 and j leaves.
inline Diagram generator(const GenSymbol& s) {
  Diagram d = [&]() -> Diagram {
    switch (s.kind) {
      case GenSymbol::Kind::x: {
        Tree top = detail::x0_top_pattern();
        Tree bottom = detail::x0_bottom_pattern();
        for (int k = 0; k < s.i; ++k) {
          top = Tree::caret(Tree::leaf(), top);
          bottom = Tree::caret(Tree::leaf(), bottom);
        }
        return Diagram(top, BraidWord::identity(top.leaf_count()), bottom);
      }
      case GenSymbol::Kind::sigma: {
        Tree t = Tree::all_right(s.i + 2);
        return Diagram(t, BraidWord(s.i + 2, {s.i}), t);
      }
      case GenSymbol::Kind::tau: {
        Tree t = Tree::all_right(s.i + 1);
        return Diagram(t, BraidWord(s.i + 1, {s.i}), t);
      }
      case GenSymbol::Kind::alpha: {
        Tree t = Tree::all_right(s.j + 1);
        return Diagram(t, detail::loop_braid(s.i, s.j, s.j + 1), t);
      }
      case GenSymbol::Kind::beta: {
        Tree t = Tree::all_right(s.j);
        return Diagram(t, detail::loop_braid(s.i, s.j, s.j), t);
      }
    }
    throw std::logic_error("unknown generator kind");
  }();
  return s.exponent == 1 ? d : d.inverse();
}

/// Left-to-right product of generator diagrams; the empty word is the
/// identity.
inline Diagram eval_word(const GenWord& w) {
  Diagram acc = Diagram::identity();
  for (const auto& s : w) acc = acc * generator(s);
  return acc;
}

/// Parses whitespace-separated tokens like "x0 s1 t2 a1,2 b1,3^-1",
/// case-insensitively.
inline GenWord parse_word(std::string_view text) {
  GenWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    const char kind_ch = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
    ++pos;
    auto read_int = [&]() -> int {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected index", pos);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      return v;
    };
    GenSymbol sym;
    switch (kind_ch) {
      case 'x': sym = gen_x(read_int()); break;
      case 's': sym = gen_sigma(read_int()); break;
      case 't': sym = gen_tau(read_int()); break;
      case 'a':
      case 'b': {
        const int i = read_int();
        if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
        const int j = read_int();
        try {
          sym = kind_ch == 'a' ? gen_alpha(i, j) : gen_beta(i, j);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), start);
        }
        break;
      }
      default:
        throw ParseError("unknown generator letter", start);
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = false;
      if (pos < text.size() && text[pos] == '-') {
        neg = true;
        ++pos;
      }
      if (pos >= text.size() || text[pos] != '1') throw ParseError("exponent must be 1 or -1", pos);
      ++pos;
      if (neg) sym = sym.inverse();
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected character in token", pos);
    out.push_back(sym);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relation catalogs of the two infinite presentations.

struct RelationInstance {
  std::string tag;
  GenWord lhs;
  GenWord rhs;

  std::string str() const {
    std::string s = tag + ": ";
    for (const auto& g : lhs) s += g.str() + " ";
    s += "= ";
    for (const auto& g : rhs) s += g.str() + " ";
    return s;
  }
};

enum class Presentation { vbr, fbr };

namespace detail {

inline GenWord cat(std::initializer_list<GenWord> parts) {
  GenWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

/// Every relation family of the Vbr presentation, instantiated at every
/// admissible index tuple with all tuple variables <= bound.
inline std::vector<RelationInstance> vbr_relation_instances(int bound) {
  std::vector<RelationInstance> out;
  auto add = [&](const char* tag, GenWord lhs, GenWord rhs) {
    out.push_back({tag, std::move(lhs), std::move(rhs)});
  };
  const auto X = gen_x;
  const auto S = gen_sigma;
  const auto T = gen_tau;
  for (int i = 0; i < bound; ++i)
    for (int j = i + 1; j <= bound; ++j)
      add("(A)", {X(j), X(i)}, {X(i), X(j + 1)});
  for (int i = 1; i <= bound; ++i) {
    for (int j = i + 2; j <= bound; ++j) {
      add("(b1)", {S(i), S(j)}, {S(j), S(i)});
      add("(b3)", {S(i), T(j)}, {T(j), S(i)});
    }
    add("(b2)", {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)});
    add("(b4)", {S(i), T(i + 1), S(i)}, {T(i + 1), S(i), T(i + 1)});
    for (int j = i + 1; j <= bound; ++j) add("(c1)", {S(i), X(j)}, {X(j), S(i)});
    add("(c2)", {S(i), X(i)}, {X(i - 1), S(i + 1), S(i)});
    for (int j = 1; j <= i - 2; ++j) {
      add("(c3)", {S(i), X(j)}, {X(j), S(i + 1)});
      add("(d1)", {T(i), X(j)}, {X(j), T(i + 1)});
    }
    add("(c4)", {S(i + 1), X(i)}, {X(i + 1), S(i + 1), S(i + 2)});
    add("(d2)", {T(i), X(i - 1)}, {S(i), T(i + 1)});
    add("(d3)", {T(i)}, {X(i - 1), T(i + 1), S(i)});
  }
  return out;
}

/// Every relation family of the Fbr presentation, instantiated at every
/// admissible index tuple with all tuple variables <= bound.
inline std::vector<RelationInstance> fbr_relation_instances(int bound) {
  using detail::cat;
  std::vector<RelationInstance> out;
  auto add = [&](const char* tag, GenWord lhs, GenWord rhs) {
    out.push_back({tag, std::move(lhs), std::move(rhs)});
  };
  const auto X = gen_x;
  const auto A = gen_alpha;
  const auto B = gen_beta;
  for (int i = 0; i < bound; ++i)
    for (int j = i + 1; j <= bound; ++j)
      add("(A)", {X(j), X(i)}, {X(i), X(j + 1)});

  // Conjugation action of alpha_{r,s} on the pure generators. The conjugator
  // words below are the ones consistent with this library's pinned crossing
  // and stacking conventions (the ones forced by the character duality and
  // the generator pictures); they are the mirror images of the classical
  // right-action forms.
  auto conj = [&](const char* tag, const GenSymbol& by, const GenSymbol& of, GenWord rhs) {
    add(tag, {by.inverse(), of, by}, std::move(rhs));
  };
  for (int r = 1; r <= bound; ++r)
    for (int s = r + 1; s <= bound; ++s)
      for (int i = 1; i <= bound; ++i)
        for (int j = i + 1; j <= bound; ++j) {
          const bool disjoint = (s < i) || (i < r && j > s);  // r<s<i<j or i<r<s<j
          if (disjoint) {
            conj("(B1)", A(r, s), A(i, j), {A(i, j)});
            conj("(B5)", A(r, s), B(i, j), {B(i, j)});
          } else if (s == i) {  // r < s = i < j
            conj("(B2)", A(r, s), A(i, j),
                 {A(i, j), A(r, j), A(i, j), inv(A(r, j)), inv(A(i, j))});
            conj("(B6)", A(r, s), B(i, j),
                 {B(i, j), B(r, j), B(i, j), inv(B(r, j)), inv(B(i, j))});
          } else if (r == i && s < j) {  // r = i < s < j
            conj("(B3)", A(r, s), A(i, j), {A(s, j), A(i, j), inv(A(s, j))});
            conj("(B7)", A(r, s), B(i, j), {B(s, j), B(i, j), inv(B(s, j))});
          } else if (r < i && i < s && s < j) {  // r < i < s < j
            const GenWord ua = {A(s, j), A(r, j), inv(A(s, j)), inv(A(r, j))};
            const GenWord ub = {B(s, j), B(r, j), inv(B(s, j)), inv(B(r, j))};
            conj("(B4)", A(r, s), A(i, j), cat({ua, {A(i, j)}, inverse(ua)}));
            conj("(B8)", A(r, s), B(i, j), cat({ub, {B(i, j)}, inverse(ub)}));
          }
        }

  for (int i = 1; i <= bound; ++i)
    for (int j = i + 1; j <= bound; ++j)
      add("(C)", {B(i, j)}, {B(i, j + 1), A(i, j)});

  for (int k = 1; k <= bound; ++k)
    for (int i = 1; i <= bound; ++i)
      for (int j = i + 1; j <= bound; ++j) {
        if (k < i) {
          add("(D1)", {A(i, j), X(k - 1)}, {X(k - 1), A(i + 1, j + 1)});
          add("(D6)", {B(i, j), X(k - 1)}, {X(k - 1), B(i + 1, j + 1)});
        } else if (k == i) {
          add("(D2)", {A(i, j), X(k - 1)}, {X(k - 1), A(i + 1, j + 1), A(i, j + 1)});
          add("(D7)", {B(i, j), X(k - 1)}, {X(k - 1), B(i + 1, j + 1), B(i, j + 1)});
        } else if (k < j) {
          add("(D3)", {A(i, j), X(k - 1)}, {X(k - 1), A(i, j + 1)});
          add("(D8)", {B(i, j), X(k - 1)}, {X(k - 1), B(i, j + 1)});
        } else if (k == j) {
          add("(D4)", {A(i, j), X(k - 1)}, {X(k - 1), A(i, j + 1), A(i, j)});
        } else {  // j < k
          add("(D5)", {A(i, j), X(k - 1)}, {X(k - 1), A(i, j)});
          add("(D9)", {B(i, j), X(k - 1)}, {X(k - 1), B(i, j)});
        }
      }
  return out;
}

struct SuiteReport {
  int total = 0;
  std::vector<std::pair<std::string, int>> family_counts;  // tag -> instances
  std::vector<RelationInstance> failures;

  bool passed() const { return failures.empty(); }
};

/// Evaluates both sides of every instantiated relation and compares with
/// the exact equality oracle.
inline SuiteReport run_relation_suite(Presentation p, int bound) {
  if (bound < 3) throw std::invalid_argument("relation suite needs bound >= 3");
  const auto instances =
      p == Presentation::vbr ? vbr_relation_instances(bound) : fbr_relation_instances(bound);
  SuiteReport rep;
  rep.total = static_cast<int>(instances.size());
  for (const auto& inst : instances) {
    auto it = std::find_if(rep.family_counts.begin(), rep.family_counts.end(),
                           [&](const auto& fc) { return fc.first == inst.tag; });
    if (it == rep.family_counts.end())
      rep.family_counts.emplace_back(inst.tag, 1);
    else
      ++it->second;
    if (!equal(eval_word(inst.lhs), eval_word(inst.rhs))) rep.failures.push_back(inst);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Elements of F with prescribed support.

/// A nontrivial braid-free element acting as the identity outside [a,b]:
/// the standard 3-interval map grafted into the largest aligned dyadic
/// interval [a, a + 2^-e] inside [a,b]. f_supported_on(0,1) is exactly x_0.
inline Diagram f_supported_on(const Dyadic& a, const Dyadic& b) {
  if (!(Dyadic::zero() <= a && a < b && b <= Dyadic::one()))
    throw std::invalid_argument("support interval is degenerate");
  int e = a.exp();
  while (a + Dyadic(1, e) > b) ++e;
  const DyadicInterval iv(a.num() << (e - a.exp()), e);
  auto [skeleton, leaf_idx] = tree_with_leaf(iv);
  Tree top = skeleton.replace_leaf(leaf_idx, detail::x0_top_pattern());
  Tree bottom = skeleton.replace_leaf(leaf_idx, detail::x0_bottom_pattern());
  return Diagram(std::move(top), BraidWord::identity(skeleton.leaf_count() + 2),
                 std::move(bottom));
}

/// For g in the pure kernel and a nontrivial braid-free f, produces h in F
/// commuting with g but not with f. Mirrors the constructive dichotomy: if
/// f fixes every essential point of g, a small supported element near a
/// point moved by f works; otherwise an element whose interior fixed set is
/// exactly the essential set works.
inline Diagram conjugator_search(const Diagram& g, const Diagram& f) {
  {
    const ElementClass gc = g.classify();
    if (gc != ElementClass::pure_kernel && gc != ElementClass::identity)
      throw std::invalid_argument("g must be an equal-tree pure representative");
    if (!f.braid().is_trivial()) throw std::invalid_argument("f must be braid-free");
    if (f.is_identity()) throw std::invalid_argument("f must be nontrivial");
  }
  const std::vector<Dyadic> ess = g.essential_points();
  const bool fixes_all =
      std::all_of(ess.begin(), ess.end(), [&](const Dyadic& x) { return f.act(x) == x; });

  std::vector<Dyadic> pts;
  pts.push_back(Dyadic::zero());
  pts.insert(pts.end(), ess.begin(), ess.end());
  pts.push_back(Dyadic::one());

  if (fixes_all) {
    // Some breakpoint of f moves; otherwise f would be affine with fixed
    // endpoints on every piece of its own subdivision, hence trivial.
    const auto dom = f.bottom().leaf_intervals();
    Dyadic y;
    bool found = false;
    for (std::size_t k = 0; k + 1 < dom.size(); ++k) {
      const Dyadic cand = dom[k].hi();
      if (f.act(cand) != cand) {
        y = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("nontrivial f fixes all its breakpoints");
    const Dyadic v = *std::find_if(pts.begin(), pts.end(), [&](const Dyadic& p) { return p > y; });
    const Dyadic fy = f.act(y);
    int e = std::max(y.exp(), 1);
    if (fy > y) {
      while (y + Dyadic(1, e) > fy) ++e;
    } else {
      while (y + Dyadic(1, e) > v || f.act(y + Dyadic(1, e)) > y) ++e;
    }
    return f_supported_on(y, y + Dyadic(1, e));
  }

  // f moves an essential point: build h with interior fixed set exactly the
  // essential set, piece by piece over g's tree.
  const Tree& t = g.top();
  const auto intervals = t.leaf_intervals();
  const int n = t.leaf_count();
  std::vector<Tree> top_forest(static_cast<std::size_t>(n));
  std::vector<Tree> bottom_forest(static_cast<std::size_t>(n));
  const std::set<Dyadic> ess_set(ess.begin(), ess.end());
  int piece_start = 1;
  for (int i = 1; i <= n; ++i) {
    const bool last_of_piece =
        i == n || ess_set.count(intervals[static_cast<std::size_t>(i)].lo()) > 0;
    if (!last_of_piece) continue;
    if (piece_start == i) {
      // single-leaf piece: graft the scaled 3-interval map
      top_forest[static_cast<std::size_t>(i - 1)] = detail::x0_top_pattern();
      bottom_forest[static_cast<std::size_t>(i - 1)] = detail::x0_bottom_pattern();
    } else {
      // multi-leaf piece: one-step conveyor, no interior fixed point
      bottom_forest[static_cast<std::size_t>(piece_start - 1)] =
          Tree::caret(Tree::leaf(), Tree::leaf());
      top_forest[static_cast<std::size_t>(i - 1)] = Tree::caret(Tree::leaf(), Tree::leaf());
    }
    piece_start = i + 1;
  }
  Tree top = attach(t, Forest(std::move(top_forest)));
  Tree bottom = attach(t, Forest(std::move(bottom_forest)));
  return Diagram(top, BraidWord::identity(top.leaf_count()), std::move(bottom));
}

}  // namespace braidthom
