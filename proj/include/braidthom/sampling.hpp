#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "braidthom/gens.hpp"

namespace braidthom {

/// Deterministic RNG for the sampled suites. The seed comes from
/// BRAIDTHOM_SEED when set (default 0), so every sampled run is
/// reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("BRAIDTHOM_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
  }
  static Rng from_env() { return Rng(seed_from_env()); }

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

private:
  std::mt19937_64 eng_;
};

inline Tree random_tree(Rng& rng, int leaves) {
  if (leaves <= 1) return Tree::leaf();
  const int left = rng.uniform(1, leaves - 1);
  return Tree::caret(random_tree(rng, left), random_tree(rng, leaves - left));
}

inline BraidWord random_braid(Rng& rng, int strands, int length) {
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length && strands >= 2; ++i) {
    const int g = rng.uniform(1, strands - 1);
    letters.push_back(rng.coin() ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

/// Random pure braid: a random word followed by adjacent swaps that sort
/// the strands back to their starting order.
inline BraidWord random_pure_braid(Rng& rng, int strands, int length) {
  BraidWord b = random_braid(rng, strands, length);
  std::vector<int> pos(static_cast<std::size_t>(strands));
  for (int p = 1; p <= strands; ++p) pos[static_cast<std::size_t>(p - 1)] = p;
  for (int l : b.letters()) {
    const int i = std::abs(l);
    std::swap(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)]);
  }
  std::vector<int> letters = b.letters();
  bool sorted = false;
  while (!sorted) {
    sorted = true;
    for (int p = 1; p < strands; ++p) {
      if (pos[static_cast<std::size_t>(p - 1)] > pos[static_cast<std::size_t>(p)]) {
        std::swap(pos[static_cast<std::size_t>(p - 1)], pos[static_cast<std::size_t>(p)]);
        letters.push_back(rng.coin() ? p : -p);
        sorted = false;
      }
    }
  }
  return BraidWord(strands, std::move(letters));
}

inline Diagram random_diagram(Rng& rng, int leaves, int braid_length) {
  return Diagram(random_tree(rng, leaves), random_braid(rng, leaves, braid_length),
                 random_tree(rng, leaves));
}

inline Diagram random_fbr(Rng& rng, int leaves, int braid_length) {
  return Diagram(random_tree(rng, leaves), random_pure_braid(rng, leaves, braid_length),
                 random_tree(rng, leaves));
}

inline Diagram random_pure_kernel(Rng& rng, int leaves, int braid_length) {
  Tree t = random_tree(rng, leaves);
  return Diagram(t, random_pure_braid(rng, leaves, braid_length), t);
}

/// Random braid-free element (a word in the x_i).
inline Diagram random_f_element(Rng& rng, int max_index, int length) {
  Diagram d = Diagram::identity();
  for (int i = 0; i < length; ++i) {
    GenSymbol s = gen_x(rng.uniform(0, max_index));
    if (rng.coin()) s = s.inverse();
    d = d * generator(s);
  }
  return d;
}

inline Diagram random_expansions(Rng& rng, const Diagram& d, int count) {
  Diagram out = d;
  for (int i = 0; i < count; ++i) out = out.expand(rng.uniform(1, out.strands()));
  return out;
}

/// Random element of the commutator subgroup of F with support inside
/// [1/4, 3/4], so small trees suffice to dominate it.
inline Diagram random_interior_commutator(Rng& rng) {
  static const Dyadic grid[] = {Dyadic(1, 2), Dyadic(3, 3), Dyadic(1, 1), Dyadic(5, 3),
                                Dyadic(3, 2)};
  auto piece = [&] {
    const int a = rng.uniform(0, 3);
    const int b = rng.uniform(a + 1, 4);
    Diagram f = f_supported_on(grid[a], grid[b]);
    return rng.coin() ? f : f.inverse();
  };
  return commutator(piece() * piece(), piece() * piece());
}

/// Braid-free element fixing every point of `points` pointwise: a product
/// of supported elements over a random nonempty subset of the complementary
/// pieces.
inline Diagram random_fixing(Rng& rng, const std::vector<Dyadic>& points) {
  std::vector<Dyadic> pts;
  pts.push_back(Dyadic::zero());
  pts.insert(pts.end(), points.begin(), points.end());
  pts.push_back(Dyadic::one());
  Diagram out = Diagram::identity();
  bool nonempty = false;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const bool use = rng.coin() || (!nonempty && k + 2 == pts.size());
    if (!use) continue;
    nonempty = true;
    Diagram piece = f_supported_on(pts[k], pts[k + 1]);
    out = out * (rng.coin() ? piece : piece.inverse());
  }
  return out;
}

}  // namespace braidthom
