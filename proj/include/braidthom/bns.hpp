#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/diagram.hpp"
#include "braidthom/gens.hpp"
#include "braidthom/sampling.hpp"

namespace braidthom {

/// Small exact rational, reduced, positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(std::string_view text, std::size_t offset = 0) {
    std::size_t pos = 0;
    auto read = [&]() -> std::int64_t {
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw ParseError("expected number", offset + pos);
      std::int64_t v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      return neg ? -v : v;
    };
    const std::int64_t n = read();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      const std::int64_t d = read();
      if (pos != text.size()) throw ParseError("trailing characters in rational", offset + pos);
      return Rational(n, d);
    }
    if (pos != text.size()) throw ParseError("trailing characters in rational", offset + pos);
    return Rational(n);
  }
};

/// A character of Fbr as coefficients over the basis
/// (phi0, phi1, omega0, omega1). Scaling by a positive rational does not
/// change which elements survive.
struct Character {
  Rational a, b, c, d;

  static Character phi0() { return {1, 0, 0, 0}; }
  static Character phi1() { return {0, 1, 0, 0}; }
  static Character omega0() { return {0, 0, 1, 0}; }
  static Character omega1() { return {0, 0, 0, 1}; }

  std::string str() const {
    return a.str() + "," + b.str() + "," + c.str() + "," + d.str();
  }

  /// Text form "a,b,c,d" with rational entries, e.g. "0,0,0,1" or "1/2,-1,0,0".
  static Character parse(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    if (parts.size() != 4) throw ParseError("character needs four coefficients", 0);
    return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2]),
            Rational::parse(parts[3])};
  }
};

inline Rational evaluate(const Character& chi, const Diagram& d) {
  if (d.classify() == ElementClass::vbr)
    throw std::invalid_argument("characters are defined on elements with pure braids");
  const Characters v = d.characters();
  return chi.a * Rational(v.phi0) + chi.b * Rational(v.phi1) + chi.c * Rational(v.omega0) +
         chi.d * Rational(v.omega1);
}

inline bool survives(const Character& chi, const Diagram& d) { return !evaluate(chi, d).is_zero(); }

// ---------------------------------------------------------------------------
// Finite witness checks for the survival criterion: J dominates I, every
// element of J survives, and the commuting graph of J is connected.

struct WitnessReport {
  std::string label;
  std::size_t j_size = 0;
  std::size_t i_size = 0;
  std::vector<std::string> dead;         // J elements killed by the character
  std::vector<std::string> undominated;  // I elements commuting with no J element
  bool connected = false;

  bool passed() const { return dead.empty() && undominated.empty() && connected; }

  std::string summary() const {
    std::string s = label + ": |J|=" + std::to_string(j_size) + " |I|=" + std::to_string(i_size);
    s += dead.empty() ? ", all of J survives" : ", " + std::to_string(dead.size()) + " dead";
    s += undominated.empty() ? ", J dominates I"
                             : ", " + std::to_string(undominated.size()) + " undominated";
    s += connected ? ", C(J) connected" : ", C(J) NOT connected";
    return s;
  }
};

namespace detail {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Named elements, so reports can point at failures.
using NamedDiagram = std::pair<std::string, Diagram>;

inline WitnessReport witness_check(std::string label, const std::vector<NamedDiagram>& J,
                                   const std::vector<NamedDiagram>& I, const Character& chi) {
  WitnessReport rep;
  rep.label = std::move(label);
  rep.j_size = J.size();
  rep.i_size = I.size();
  for (const auto& [name, d] : J)
    if (!survives(chi, d)) rep.dead.push_back(name);
  for (const auto& [name, d] : I) {
    bool dominated = false;
    for (const auto& [jn, jd] : J) {
      if (commute(d, jd)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) rep.undominated.push_back(name);
  }
  // Connectivity of the commuting graph, testing pairs hub-first so that a
  // well-ordered J needs about |J| exact checks.
  if (!J.empty()) {
    detail::UnionFind uf(J.size());
    std::size_t components = J.size();
    for (std::size_t hub = 0; hub < J.size() && components > 1; ++hub)
      for (std::size_t i = hub + 1; i < J.size() && components > 1; ++i) {
        if (uf.find(hub) == uf.find(i)) continue;
        if (commute(J[hub].second, J[i].second) && uf.unite(hub, i)) --components;
      }
    rep.connected = components == 1;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The three built-in witness families, truncated at a finite index bound.

struct BuiltinReport {
  int bound = 0;
  std::vector<WitnessReport> cases;
  std::vector<std::pair<std::string, bool>> details;

  bool passed() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const WitnessReport& r) { return r.passed(); }) &&
           std::all_of(details.begin(), details.end(), [](const auto& d) { return d.second; });
  }
};

namespace detail {

inline NamedDiagram named_gen(const GenSymbol& s) { return {s.str(), generator(s)}; }

// Conjugate of the first-around-last loop living on the tree S.
inline NamedDiagram loop_on_tree(const Tree& s) {
  const int n = s.leaf_count();
  return {"loop[" + s.str() + "]", Diagram(s, loop_braid(1, n, n), s)};
}

inline NamedDiagram twist_on_tree(const Tree& t) {
  return {"twist[" + t.str() + "]", Diagram::central_twist(t)};
}

}  // namespace detail

/// Case 1: characters with nonzero omega1 component. J is the set of
/// adjacent loops alpha_{i,i+1}; I is the full generating set they
/// dominate.
inline WitnessReport builtin_case_omega1(int bound, const Character& chi) {
  std::vector<NamedDiagram> J;
  for (int i = 1; i <= bound; ++i) J.push_back(detail::named_gen(gen_alpha(i, i + 1)));
  std::vector<NamedDiagram> I;
  for (int i = 1; i < bound - 1; ++i)
    for (int j = i + 1; j <= bound - 1; ++j) I.push_back(detail::named_gen(gen_alpha(i, j)));
  for (int i = 1; i <= bound; ++i)
    for (int j = i + 3; j <= bound; ++j) I.push_back(detail::named_gen(gen_beta(i, j)));
  I.push_back(detail::named_gen(gen_x(2)));
  I.push_back({"x2 x0^-1", eval_word({gen_x(2), inv(gen_x(0))})});
  return witness_check("case omega1!=0", J, I, chi);
}

/// Case 2: nonzero omega0, zero omega1 component. J is every conjugate of a
/// first-around-last loop together with every central twist, over all trees
/// with at most `bound` leaves; I is sampled from the kernel, the commutator
/// subgroup of F, and elements fixing 1/2.
inline WitnessReport builtin_case_omega0(int bound, const Character& chi, Rng& rng,
                                         int samples = 12) {
  // Order matters for the connectivity scan: a twist on a refinement
  // commutes with everything on a coarser tree, so twists come first and
  // each loop sits right after the twist on its own tree.
  std::vector<NamedDiagram> J;
  J.push_back(detail::twist_on_tree(Tree::all_right(2)));
  for (int n = 3; n <= bound; ++n)
    for (const auto& t : all_trees(n)) {
      J.push_back(detail::twist_on_tree(t));
      J.push_back(detail::loop_on_tree(t));
    }

  std::vector<NamedDiagram> I;
  for (int s = 0; s < samples; ++s) {
    I.push_back({"kernel sample " + std::to_string(s),
                 random_pure_kernel(rng, rng.uniform(2, bound), rng.uniform(1, 6))});
    I.push_back({"commutator sample " + std::to_string(s), random_interior_commutator(rng)});
    I.push_back({"fixing-1/2 sample " + std::to_string(s),
                 random_fixing(rng, {Dyadic(1, 1)})});
  }
  return witness_check("case omega0!=0", J, I, chi);
}

/// Case 3: characters killing the kernel with both slope components
/// nonzero. J consists of elements supported against exactly one endpoint
/// of [0,1].
inline WitnessReport builtin_case_slopes(int bound, const Character& chi, Rng& rng,
                                         int samples = 12) {
  std::vector<NamedDiagram> J;
  for (int k = 1; k <= bound; ++k) {
    J.push_back({"left[0,1/2^" + std::to_string(k) + "]",
                 f_supported_on(Dyadic::zero(), Dyadic(1, k))});
    J.push_back({"right[1-1/2^" + std::to_string(k) + ",1]",
                 f_supported_on(Dyadic((std::int64_t(1) << k) - 1, k), Dyadic::one())});
  }
  std::vector<NamedDiagram> I = J;
  for (int i = 1; i < bound; ++i)
    for (int j = i + 1; j <= bound; ++j) {
      I.push_back(detail::named_gen(gen_alpha(i, j)));
      I.push_back(detail::named_gen(gen_beta(i, j)));
    }
  for (int s = 0; s < samples; ++s)
    I.push_back({"commutator sample " + std::to_string(s), random_interior_commutator(rng)});
  return witness_check("case slopes nonzero", J, I, chi);
}

/// Runs the three cases at their standard characters plus the named
/// sub-claims: the diameter-2 property of case 2 and the commutation
/// pattern of alpha_{2,3} in case 1.
inline BuiltinReport builtin_witnesses(int bound, Rng& rng, int diameter_pairs = 60) {
  if (bound < 4) throw std::invalid_argument("builtin witnesses need bound >= 4");
  BuiltinReport rep;
  rep.bound = bound;
  rep.cases.push_back(builtin_case_omega1(bound, Character::omega1()));
  rep.cases.push_back(builtin_case_omega0(bound, Character::omega0(), rng));
  rep.cases.push_back(builtin_case_slopes(bound, Character::parse("1,1,0,0"), rng));
  rep.cases.push_back(builtin_case_slopes(bound, Character::parse("2,-3,0,0"), rng));

  // Case 1 detail: alpha_{2,3} fails to commute with alpha_{1,2} but
  // commutes with alpha_{4,5}.
  const Diagram a23 = generator(gen_alpha(2, 3));
  rep.details.emplace_back("alpha_{2,3} does not commute with alpha_{1,2}",
                           !commute(a23, generator(gen_alpha(1, 2))));
  rep.details.emplace_back("alpha_{2,3} commutes with alpha_{4,5}",
                           commute(a23, generator(gen_alpha(4, 5))));

  // Case 2 detail: sampled pairs of witnesses share a central-twist
  // neighbour on the common refinement, so the graph has diameter 2.
  {
    std::vector<NamedDiagram> pool;
    for (int n = 2; n <= bound; ++n)
      for (const auto& t : all_trees(n)) {
        pool.push_back(detail::twist_on_tree(t));
        if (n > 2) pool.push_back(detail::loop_on_tree(t));
      }
    bool ok = true;
    for (int s = 0; s < diameter_pairs && ok; ++s) {
      const auto& x = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
      const auto& y = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(pool.size()) - 1))];
      const Diagram mid = Diagram::central_twist(tree_union(x.second.top(), y.second.top()));
      ok = commute(x.second, mid) && commute(y.second, mid);
    }
    rep.details.emplace_back("case 2 sampled pairs share a twist neighbour (diameter 2)", ok);
  }
  return rep;
}

}  // namespace braidthom
