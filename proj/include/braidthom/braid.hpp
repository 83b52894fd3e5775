#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/errors.hpp"
#include "braidthom/tree.hpp"

namespace braidthom {

/// Permutation of {1..n}, stored as the image array.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

private:
  std::vector<int> img_;
};

/// Total winding numbers of a pure braid: one integer per strand pair,
/// in units of full turns. `outer` is the winding of the first and last
/// strands, `adjacent_sum` the sum over all adjacent pairs. Those two are
/// the only pairwise measurements invariant under cloning.
struct WindingData {
  int strands = 1;
  std::vector<std::int64_t> pairs;  // (i,j), i<j, lexicographic
  std::int64_t outer = 0;
  std::int64_t adjacent_sum = 0;

  std::int64_t pair(int i, int j) const {
    if (i < 1 || i >= j || j > strands) throw std::invalid_argument("bad strand pair");
    return pairs[pair_index(i, j, strands)];
  }

  static std::size_t pair_index(int i, int j, int n) {
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
  }
};

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Conventions, fixed once for the whole library and pinned by the
/// character/relation test suites:
///   - letters apply in sequence reading the diagram from bottom to top;
///   - strand positions are numbered at the bottom;
///   - letter +i crosses the strand at position i+1 over the strand at
///     position i (so the over-strand moves one place to the left);
///   - a crossing contributes its letter's sign to the winding count of the
///     pair of strands involved.
///
/// Words are kept freely reduced. Equality of group elements is decided
/// exactly through the faithful action on a free group of rank n.
class BraidWord {
public:
  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int l : letters_)
      if (l == 0 || std::abs(l) >= strands_)
        throw std::invalid_argument("letter " + std::to_string(l) + " invalid on " +
                                    std::to_string(strands_) + " strands");
    free_reduce(letters_);
  }

  static BraidWord identity(int strands) { return BraidWord(strands); }

  /// The full twist (sigma_1 ... sigma_{n-1})^n generating the center of
  /// the pure braid group; every pair winds exactly once.
  static BraidWord full_twist(int n) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n; ++r)
      for (int i = 1; i < n; ++i) w.push_back(i);
    return BraidWord(n, std::move(w));
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  /// Stacking product: this braid's picture drawn above rhs's, so rhs's
  /// crossings happen first reading bottom to top.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("strand count mismatch");
    std::vector<int> w = b.letters_;
    w.reserve(w.size() + a.letters_.size());
    for (int l : a.letters_) append_reduced(w, l);
    return BraidWord(a.strands_, std::move(w));
  }

  BraidWord inverse() const {
    std::vector<int> w(letters_.rbegin(), letters_.rend());
    for (int& l : w) l = -l;
    return BraidWord(strands_, std::move(w));
  }

  BraidWord pow(int e) const {
    BraidWord base = e < 0 ? inverse() : *this;
    BraidWord acc = identity(strands_);
    for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
    return acc;
  }

  /// Image under the natural quotient to the symmetric group: bottom
  /// position -> top position.
  Permutation permutation() const {
    std::vector<int> pos(static_cast<std::size_t>(strands_));
    std::iota(pos.begin(), pos.end(), 1);  // pos[p-1] = strand occupying position p
    for (int l : letters_) {
      const int i = std::abs(l);
      std::swap(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)]);
    }
    std::vector<int> img(static_cast<std::size_t>(strands_));
    for (int p = 1; p <= strands_; ++p) img[static_cast<std::size_t>(pos[static_cast<std::size_t>(p - 1)] - 1)] = p;
    return Permutation(std::move(img));
  }

  bool is_pure() const { return permutation().is_identity(); }

  /// Exact word-problem decision via the faithful Artin action on the free
  /// group F_n: letter +i maps g_i -> g_i g_{i+1} g_i^{-1}, g_{i+1} -> g_i,
  /// fixing the rest. The braid is trivial iff every generator is fixed
  /// after free reduction.
  bool is_trivial() const {
    if (letters_.empty()) return true;
    std::vector<std::vector<int>> img(static_cast<std::size_t>(strands_));
    for (int j = 0; j < strands_; ++j) img[static_cast<std::size_t>(j)] = {j + 1};
    for (int l : letters_) {
      const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
      std::vector<int>& a = img[i];
      std::vector<int>& b = img[i + 1];
      if (l > 0) {
        std::vector<int> na = concat(a, b, inverse_word(a));
        b = std::move(a);
        a = std::move(na);
      } else {
        std::vector<int> nb = concat(inverse_word(b), a, b);
        a = std::move(b);
        b = std::move(nb);
      }
    }
    for (int j = 0; j < strands_; ++j)
      if (img[static_cast<std::size_t>(j)] != std::vector<int>{j + 1}) return false;
    return true;
  }

  /// Cloning map: bifurcates the strand at bottom position k into two
  /// parallel strands, giving a braid on n+1 strands. Tracks the clone
  /// pair's position; a crossing that moves the pair past a neighbour is
  /// emitted as two equal-sign letters.
  BraidWord clone(int k) const {
    if (k < 1 || k > strands_) throw std::invalid_argument("clone index out of range");
    int c = k;  // current position of the cloned strand in the original braid
    std::vector<int> out;
    out.reserve(letters_.size() + 4);
    for (int l : letters_) {
      const int i = std::abs(l);
      const int s = l > 0 ? 1 : -1;
      if (i + 1 < c) {
        out.push_back(s * i);
      } else if (i > c) {
        out.push_back(s * (i + 1));
      } else if (i == c) {  // pair moves right past the neighbour
        out.push_back(s * (c + 1));
        out.push_back(s * c);
        ++c;
      } else {  // i == c-1: pair moves left
        out.push_back(s * (c - 1));
        out.push_back(s * c);
        --c;
      }
    }
    return BraidWord(strands_ + 1, std::move(out));
  }

  /// Iterated cloning along a forest's caret sequence.
  BraidWord clone_forest(const Forest& f) const {
    if (f.roots() != strands_) throw std::invalid_argument("forest root count mismatch");
    BraidWord b = *this;
    for (int k : f.carets()) b = b.clone(k);
    return b;
  }

  /// Deletes every strand whose bottom number is not in `keep`, simulating
  /// the braid crossing by crossing and emitting a crossing only when both
  /// strands involved are kept.
  BraidWord delete_strands(const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("must keep at least one strand");
    std::vector<bool> kept(static_cast<std::size_t>(strands_) + 1, false);
    for (int s : keep) {
      if (s < 1 || s > strands_) throw std::invalid_argument("kept strand out of range");
      if (kept[static_cast<std::size_t>(s)]) throw std::invalid_argument("duplicate kept strand");
      kept[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> pos(static_cast<std::size_t>(strands_));
    std::iota(pos.begin(), pos.end(), 1);
    std::vector<int> out;
    for (int l : letters_) {
      const int i = std::abs(l);
      const int a = pos[static_cast<std::size_t>(i - 1)];
      const int b = pos[static_cast<std::size_t>(i)];
      if (kept[static_cast<std::size_t>(a)] && kept[static_cast<std::size_t>(b)]) {
        int rank = 0;
        for (int p = 1; p <= i; ++p)
          if (kept[static_cast<std::size_t>(pos[static_cast<std::size_t>(p - 1)])]) ++rank;
        out.push_back(l > 0 ? rank : -rank);
      }
      std::swap(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)]);
    }
    return BraidWord(static_cast<int>(keep.size()), std::move(out));
  }

  /// Keeps strands 1..m (the map used by the non-hopfian quotient).
  BraidWord keep_prefix(int m) const {
    std::vector<int> keep(static_cast<std::size_t>(m));
    std::iota(keep.begin(), keep.end(), 1);
    return delete_strands(keep);
  }

  /// Pairwise windings of a pure braid. Tracks strand identities through
  /// the word; each crossing adds its sign to the pair's count, and the
  /// total for every pair of a pure braid is even.
  WindingData winding() const {
    if (!is_pure()) throw std::invalid_argument("winding numbers require a pure braid");
    const int n = strands_;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
    std::vector<int> pos(static_cast<std::size_t>(n));
    std::iota(pos.begin(), pos.end(), 1);
    for (int l : letters_) {
      const int i = std::abs(l);
      const int a = pos[static_cast<std::size_t>(i - 1)];
      const int b = pos[static_cast<std::size_t>(i)];
      counts[WindingData::pair_index(std::min(a, b), std::max(a, b), n)] += l > 0 ? 1 : -1;
      std::swap(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)]);
    }
    WindingData w;
    w.strands = n;
    w.pairs.resize(counts.size());
    for (std::size_t idx = 0; idx < counts.size(); ++idx) {
      if (counts[idx] % 2 != 0) throw std::logic_error("odd crossing count on a pure braid");
      w.pairs[idx] = counts[idx] / 2;
    }
    if (n >= 2) {
      w.outer = w.pair(1, n);
      for (int i = 1; i < n; ++i) w.adjacent_sum += w.pair(i, i + 1);
    }
    return w;
  }

  /// True if deleting all but any m strands leaves the trivial braid.
  /// m = n-1 is the Brunnian condition; every pure braid is 1-loose.
  bool is_m_loose(int m) const {
    if (m < 1 || m > strands_) throw std::invalid_argument("m out of range");
    if (!is_pure()) throw std::invalid_argument("looseness is defined for pure braids");
    std::vector<int> subset(static_cast<std::size_t>(m));
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
      if (!delete_strands(subset).is_trivial()) return false;
      // next combination
      int i = m - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == strands_ - (m - 1 - i)) --i;
      if (i < 0) return true;
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

  /// Text form "B3:1,2,-1"; the strand prefix is optional when a default is
  /// supplied.
  std::string str() const {
    std::string out = "B" + std::to_string(strands_) + ":";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  static BraidWord parse(std::string_view text, int default_strands = 0);

private:
  static void append_reduced(std::vector<int>& w, int letter) {
    if (!w.empty() && w.back() == -letter)
      w.pop_back();
    else
      w.push_back(letter);
  }
  static void free_reduce(std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int l : w) append_reduced(out, l);
    w = std::move(out);
  }
  static std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& g : out) g = -g;
    return out;
  }
  static std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& c) {
    std::vector<int> out;
    out.reserve(a.size() + b.size() + c.size());
    for (int g : a) append_reduced(out, g);
    for (int g : b) append_reduced(out, g);
    for (int g : c) append_reduced(out, g);
    return out;
  }

  int strands_;
  std::vector<int> letters_;
};

/// Exact word-problem equality via the triviality oracle.
inline bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  return (a * b.inverse()).is_trivial();
}

inline BraidWord BraidWord::parse(std::string_view text, int default_strands) {
  std::size_t pos = 0;
  int strands = default_strands;
  std::size_t body = 0;
  if (!text.empty() && (text[0] == 'B' || text[0] == 'b')) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected ':' after strand count", 1);
    strands = 0;
    for (std::size_t i = 1; i < colon; ++i) {
      if (text[i] < '0' || text[i] > '9') throw ParseError("bad strand count", i);
      strands = strands * 10 + (text[i] - '0');
    }
    if (colon == 1) throw ParseError("missing strand count", 1);
    body = colon + 1;
  }
  if (strands < 1) throw ParseError("strand count required", 0);
  std::vector<int> letters;
  pos = body;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    bool neg = false;
    if (text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      throw ParseError("expected generator index", pos);
    int v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    if (v == 0) throw ParseError("generator index must be nonzero", pos);
    letters.push_back(neg ? -v : v);
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  if (strands < 2 && !letters.empty()) throw ParseError("letters on a single strand", body);
  for (int l : letters)
    if (std::abs(l) >= strands) throw ParseError("letter exceeds strand count", body);
  return BraidWord(strands, std::move(letters));
}

}  // namespace braidthom
