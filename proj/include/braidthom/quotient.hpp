#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/diagram.hpp"

namespace braidthom {

/// Element of the abelianization of the pure braid group on n strands:
/// one integer coefficient per strand pair over the basis e_{i,j}. The
/// image of a pure braid records the total winding number of each pair.
struct WindingVector {
  int n = 1;
  std::vector<std::int64_t> c;  // pairs (i,j), i<j, lexicographic

  explicit WindingVector(int strands)
      : n(strands), c(static_cast<std::size_t>(strands) * (strands - 1) / 2, 0) {
    if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  }

  static WindingVector basis(int n, int i, int j) {
    WindingVector v(n);
    v.at(i, j) = 1;
    return v;
  }

  std::int64_t& at(int i, int j) {
    if (i < 1 || i >= j || j > n) throw std::invalid_argument("bad pair index");
    return c[WindingData::pair_index(i, j, n)];
  }
  std::int64_t at(int i, int j) const { return const_cast<WindingVector*>(this)->at(i, j); }

  bool is_zero() const {
    for (auto v : c)
      if (v != 0) return false;
    return true;
  }

  friend WindingVector operator+(const WindingVector& a, const WindingVector& b) {
    if (a.n != b.n) throw std::invalid_argument("dimension mismatch");
    WindingVector out(a.n);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = a.c[k] + b.c[k];
    return out;
  }
  friend WindingVector operator-(const WindingVector& a) {
    WindingVector out(a.n);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = -a.c[k];
    return out;
  }
  friend bool operator==(const WindingVector& a, const WindingVector& b) {
    return a.n == b.n && a.c == b.c;
  }

  /// The cloning map on the abelianization, linear over the basis:
  ///   k < i < j        e_{i,j} -> e_{i+1,j+1}
  ///   k = i < j        e_{i,j} -> e_{i+1,j+1} + e_{i,j+1}
  ///   i < k < j        e_{i,j} -> e_{i,j+1}
  ///   i < k = j        e_{i,j} -> e_{i,j+1} + e_{i,j}
  ///   i < j < k        e_{i,j} -> e_{i,j}
  WindingVector clone_at(int k) const {
    if (k < 1 || k > n) throw std::invalid_argument("clone index out of range");
    WindingVector out(n + 1);
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const std::int64_t v = at(i, j);
        if (v == 0) continue;
        if (k < i) {
          out.at(i + 1, j + 1) += v;
        } else if (k == i) {
          out.at(i + 1, j + 1) += v;
          out.at(i, j + 1) += v;
        } else if (k < j) {
          out.at(i, j + 1) += v;
        } else if (k == j) {
          out.at(i, j + 1) += v;
          out.at(i, j) += v;
        } else {
          out.at(i, j) += v;
        }
      }
    return out;
  }

  /// Iterated cloning along a forest's normalized caret sequence.
  WindingVector clone_forest(const Forest& f) const {
    if (f.roots() != n) throw std::invalid_argument("forest root count mismatch");
    WindingVector v = *this;
    for (int k : f.carets()) v = v.clone_at(k);
    return v;
  }

  /// Text form "n=3: (1,2)=1 (2,3)=-2"; omitted pairs are zero.
  std::string str() const {
    std::string out = "n=" + std::to_string(n) + ":";
    bool any = false;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (at(i, j) != 0) {
          out += " (" + std::to_string(i) + "," + std::to_string(j) +
                 ")=" + std::to_string(at(i, j));
          any = true;
        }
    if (!any) out += " 0";
    return out;
  }

  static WindingVector parse(std::string_view text);
};

inline WindingVector winding_vector(const BraidWord& p) {
  const WindingData w = p.winding();
  WindingVector v(p.strands());
  v.c = w.pairs;
  return v;
}

/// Element of the quotient of Fbr by the 2-loose subgroup: a tree pair with
/// a winding vector in place of the braid, up to expansion and reduction.
struct AbelianizedDiagram {
  Tree top;
  WindingVector vector;
  Tree bottom;

  AbelianizedDiagram(Tree t, WindingVector v, Tree b)
      : top(std::move(t)), vector(std::move(v)), bottom(std::move(b)) {
    if (top.leaf_count() != vector.n || bottom.leaf_count() != vector.n)
      throw std::invalid_argument("tree leaf counts must match the vector dimension");
  }

  static AbelianizedDiagram identity() {
    return AbelianizedDiagram(Tree::leaf(), WindingVector(1), Tree::leaf());
  }

  bool is_identity() const { return top == bottom && vector.is_zero(); }

  AbelianizedDiagram inverse() const { return AbelianizedDiagram(bottom, -vector, top); }

  std::string str() const { return top.str() + "|" + vector.str() + "|" + bottom.str(); }
};

/// Projection to the quotient: replaces the pure braid by its winding
/// vector. A homomorphism compatible with cloning.
inline AbelianizedDiagram quotient_map(const Diagram& d) {
  if (!d.braid().is_pure()) throw std::invalid_argument("quotient requires a pure braid");
  return AbelianizedDiagram(d.top(), winding_vector(d.braid()), d.bottom());
}

inline AbelianizedDiagram ab_multiply(const AbelianizedDiagram& a, const AbelianizedDiagram& b) {
  auto [phi, psi] = common_refinement(a.bottom, b.top);
  // pure expansions add carets at the same leaf of both trees
  return AbelianizedDiagram(attach(a.top, phi),
                            a.vector.clone_forest(phi) + b.vector.clone_forest(psi),
                            attach(b.bottom, psi));
}

inline bool ab_equal(const AbelianizedDiagram& a, const AbelianizedDiagram& b) {
  return ab_multiply(a, b.inverse()).is_identity();
}

// ---------------------------------------------------------------------------
// Coherence of subgroup families under cloning.

/// Sampling probe for the completeness/coherence condition
/// clone(PB_n) ∩ G_{n+1} = clone(G_n): direction (i) is coherence
/// (members stay members under cloning), direction (ii) is completeness
/// (non-members cannot clone into members).
struct CoherenceReport {
  int budget = 0;
  int checked_i = 0;
  int checked_ii = 0;
  std::vector<std::string> counterexamples_i;
  std::vector<std::string> counterexamples_ii;

  bool coherent() const { return counterexamples_i.empty() && counterexamples_ii.empty(); }

  std::string summary() const {
    std::string s = "coherence probe over " + std::to_string(budget) + " samples: " +
                    std::to_string(checked_i) + " membership clones, " +
                    std::to_string(checked_ii) + " preimage checks";
    if (coherent()) return s + "; no counterexamples";
    return s + "; " + std::to_string(counterexamples_i.size()) + " coherence and " +
           std::to_string(counterexamples_ii.size()) + " completeness counterexamples";
  }
};

inline CoherenceReport coherence_check(
    const std::function<bool(const BraidWord&)>& member,
    const std::vector<BraidWord>& samples) {
  CoherenceReport rep;
  rep.budget = static_cast<int>(samples.size());
  for (const auto& p : samples) {
    const bool in = member(p);
    for (int k = 1; k <= p.strands(); ++k) {
      const BraidWord cl = p.clone(k);
      const bool clone_in = member(cl);
      if (in) {
        ++rep.checked_i;
        if (!clone_in)
          rep.counterexamples_i.push_back(p.str() + " is a member but clone at " +
                                          std::to_string(k) + " is not");
      }
      if (clone_in) {
        ++rep.checked_ii;
        if (!in)
          rep.counterexamples_ii.push_back(p.str() + " is not a member but clone at " +
                                           std::to_string(k) + " is");
      }
    }
  }
  return rep;
}

inline WindingVector WindingVector::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_int = [&]() -> std::int64_t {
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected integer", pos);
    std::int64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  };
  skip();
  if (pos >= text.size() || text[pos] != 'n') throw ParseError("expected 'n='", pos);
  ++pos;
  if (pos >= text.size() || text[pos] != '=') throw ParseError("expected 'n='", pos);
  ++pos;
  const std::int64_t n = read_int();
  if (n < 1) throw ParseError("dimension must be >= 1", pos);
  WindingVector v(static_cast<int>(n));
  skip();
  if (pos < text.size() && text[pos] == ':') ++pos;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] == '0' && pos + 1 == text.size()) {  // explicit zero vector
      ++pos;
      break;
    }
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    const std::int64_t i = read_int();
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    const std::int64_t j = read_int();
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    skip();
    if (pos >= text.size() || text[pos] != '=') throw ParseError("expected '='", pos);
    ++pos;
    skip();
    const std::int64_t val = read_int();
    if (i < 1 || i >= j || j > n) throw ParseError("bad pair", pos);
    v.at(static_cast<int>(i), static_cast<int>(j)) = val;
  }
  return v;
}

}  // namespace braidthom
