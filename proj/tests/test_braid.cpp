#include <catch2/catch_amalgamated.hpp>

#include "braidthom/braid.hpp"
#include "braidthom/sampling.hpp"
#include "oracles.hpp"

using namespace braidthom;

TEST_CASE("permutations of braid words") {
  const BraidWord s1(2, {1});
  const Permutation p = s1.permutation();
  CHECK(p(1) == 2);
  CHECK(p(2) == 1);
  CHECK_FALSE(s1.is_pure());

  CHECK(BraidWord::identity(5).permutation().is_identity());

  const BraidWord c(3, {1, 2});
  CHECK_FALSE(c.is_pure());
  CHECK((c * c * c).is_pure());  // a 3-cycle cubed
}

TEST_CASE("triviality oracle") {
  CHECK(BraidWord(2, {1, -1}).is_trivial());
  CHECK_FALSE(BraidWord(2, {1, 1}).is_trivial());

  // braid relation
  CHECK(equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  CHECK_FALSE(equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {1, 2, -1})));
  CHECK_THROWS_AS(equal(BraidWord(2, {1}), BraidWord(3, {1})), std::invalid_argument);

  SECTION("agreement with the bounded-rewriting oracle on short words") {
    const auto trivial = oracles::bounded_trivial_words_b3(8);
    for (const auto& w : oracles::all_b3_words(4))
      CHECK(BraidWord(3, w).is_trivial() == (trivial.count(w) > 0));
  }
  SECTION("trivial braids are in particular pure") {
    Rng rng(10);
    for (int trial = 0; trial < 60; ++trial) {
      const BraidWord b = random_braid(rng, rng.uniform(2, 4), rng.uniform(0, 8));
      if (b.is_trivial()) CHECK(b.is_pure());
      if (!b.is_pure()) CHECK_FALSE(b.is_trivial());
    }
  }
}

TEST_CASE("cloning") {
  SECTION("cloning the empty word") {
    for (int k = 1; k <= 3; ++k) CHECK(BraidWord::identity(3).clone(k) == BraidWord::identity(4));
  }
  SECTION("deleting either clone recovers the original") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord b = random_braid(rng, n, rng.uniform(0, 6));
      const int k = rng.uniform(1, n);
      const BraidWord cl = b.clone(k);
      for (int drop : {k, k + 1}) {
        std::vector<int> keep;
        for (int s = 1; s <= n + 1; ++s)
          if (s != drop) keep.push_back(s);
        CHECK(equal(cl.delete_strands(keep), b));
      }
    }
  }
  SECTION("the clone pair stays adjacent") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord b = random_braid(rng, n, rng.uniform(0, 6));
      const int k = rng.uniform(1, n);
      const Permutation q = b.clone(k).permutation();
      CHECK(q(k + 1) == q(k) + 1);
    }
  }
  SECTION("purity is invariant under cloning") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord b = random_braid(rng, n, rng.uniform(0, 6));
      const int k = rng.uniform(1, n);
      CHECK(b.is_pure() == b.clone(k).is_pure());
    }
  }
  SECTION("cloning is a homomorphism on pure braids") {
    Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
      const BraidWord p = random_pure_braid(rng, 3, rng.uniform(0, 5));
      const BraidWord q = random_pure_braid(rng, 3, rng.uniform(0, 5));
      const int k = rng.uniform(1, 3);
      CHECK(equal((p * q).clone(k), p.clone(k) * q.clone(k)));
    }
  }
  SECTION("iterated cloning is independent of the caret order") {
    const BraidWord b(2, {1, 1});
    const Forest f1 = Forest::from_carets(2, std::vector<int>{2, 1});
    const Forest f2 = Forest::from_carets(2, std::vector<int>{1, 3});
    CHECK(b.clone_forest(f1) == b.clone_forest(f2));
  }
  SECTION("composing clones along any sequence of a forest gives its map") {
    Rng rng(36);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord b = random_braid(rng, n, rng.uniform(0, 5));
      std::vector<int> ks;
      for (int i = 0; i < rng.uniform(1, 4); ++i)
        ks.push_back(rng.uniform(1, n + static_cast<int>(ks.size())));
      BraidWord along_sequence = b;
      for (int k : ks) along_sequence = along_sequence.clone(k);
      const Forest f = Forest::from_carets(n, ks);
      CHECK(equal(along_sequence, b.clone_forest(f)));
    }
  }
  CHECK_THROWS_AS(BraidWord::identity(2).clone(3), std::invalid_argument);
}

TEST_CASE("strand deletion") {
  const BraidWord b(2, {1, 1});
  CHECK(b.delete_strands({1, 2}) == b);
  CHECK(b.delete_strands({1}) == BraidWord::identity(1));
  CHECK_THROWS_AS(b.delete_strands({}), std::invalid_argument);
  CHECK_THROWS_AS(b.delete_strands({1, 1}), std::invalid_argument);

  SECTION("deletion after cloning shifts indices") {
    Rng rng(15);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord p = random_pure_braid(rng, n, rng.uniform(0, 5));
      const int k = rng.uniform(1, n);
      std::vector<int> s;
      for (int i = 1; i <= n; ++i)
        if (rng.coin()) s.push_back(i);
      if (s.empty()) s.push_back(rng.uniform(1, n));
      std::vector<int> sk;  // indices after bifurcating strand k
      for (int i : s) sk.push_back(i <= k ? i : i + 1);
      CHECK(equal(p.clone(k).delete_strands(sk), p.delete_strands(s)));
    }
  }
}

TEST_CASE("winding numbers") {
  SECTION("one full twist of two strands") {
    const WindingData w = BraidWord(2, {1, 1}).winding();
    CHECK(w.pair(1, 2) == 1);
    CHECK(w.outer == 1);
    CHECK(w.adjacent_sum == 1);
  }
  SECTION("empty word") {
    const WindingData w = BraidWord::identity(4).winding();
    CHECK(w.outer == 0);
    CHECK(w.adjacent_sum == 0);
    for (int i = 1; i < 4; ++i)
      for (int j = i + 1; j <= 4; ++j) CHECK(w.pair(i, j) == 0);
  }
  SECTION("first strand looping the third") {
    const WindingData w = BraidWord(3, {2, 1, 1, -2}).winding();
    CHECK(w.pair(1, 3) == 1);
    CHECK(w.pair(1, 2) == 0);
    CHECK(w.pair(2, 3) == 0);
    CHECK(w.outer == 1);
    CHECK(w.adjacent_sum == 0);
  }
  SECTION("non-pure input is rejected") {
    CHECK_THROWS_AS(BraidWord(2, {1}).winding(), std::invalid_argument);
  }
  SECTION("outer and adjacent windings are cloning invariants") {
    Rng rng(16);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = rng.uniform(2, 4);
      const BraidWord p = random_pure_braid(rng, n, rng.uniform(0, 6));
      const int k = rng.uniform(1, n);
      const WindingData w = p.winding();
      const WindingData wc = p.clone(k).winding();
      CHECK(w.outer == wc.outer);
      CHECK(w.adjacent_sum == wc.adjacent_sum);
    }
  }
  SECTION("letter signs account for twice the total winding") {
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform(2, 5);
      const BraidWord p = random_pure_braid(rng, n, rng.uniform(0, 8));
      std::int64_t sign_sum = 0;
      for (int l : p.letters()) sign_sum += l > 0 ? 1 : -1;
      const WindingData w = p.winding();
      std::int64_t total = 0;
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) total += w.pair(i, j);
      CHECK(sign_sum == 2 * total);
    }
  }
  SECTION("the (1,2) winding is not a cloning invariant") {
    const BraidWord twist2(2, {1, 1});
    CHECK(twist2.winding().pair(1, 2) == 1);
    const WindingData wc = twist2.clone(1).winding();
    CHECK(wc.pair(1, 2) == 0);
    CHECK(wc.adjacent_sum == 1);
    CHECK(wc.outer == 1);
  }
}

TEST_CASE("full twist") {
  CHECK(BraidWord::full_twist(1) == BraidWord::identity(1));
  CHECK(BraidWord::full_twist(2) == BraidWord(2, {1, 1}));

  const WindingData w = BraidWord::full_twist(4).winding();
  for (int i = 1; i < 4; ++i)
    for (int j = i + 1; j <= 4; ++j) CHECK(w.pair(i, j) == 1);
  CHECK(w.outer == 1);
  CHECK(w.adjacent_sum == 3);

  SECTION("central: commutes with sampled braids") {
    Rng rng(17);
    const BraidWord delta = BraidWord::full_twist(4);
    for (int trial = 0; trial < 20; ++trial) {
      const BraidWord b = random_braid(rng, 4, rng.uniform(0, 6));
      CHECK(equal(delta * b, b * delta));
    }
  }
}

TEST_CASE("m-looseness") {
  SECTION("every pure braid is 1-loose") {
    Rng rng(18);
    for (int trial = 0; trial < 25; ++trial)
      CHECK(random_pure_braid(rng, rng.uniform(2, 4), rng.uniform(0, 6)).is_m_loose(1));
  }
  CHECK_FALSE(BraidWord(2, {1, 1}).is_m_loose(2));

  SECTION("the standard Brunnian braid") {
    const BraidWord b(3, {1, -2, 1, -2, 1, -2});
    REQUIRE(b.is_pure());
    CHECK(b.is_m_loose(2));
    CHECK_FALSE(b.is_trivial());
    CHECK_FALSE(b.is_m_loose(3));
  }
  SECTION("2-loose means zero winding vector") {
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
      BraidWord p = random_pure_braid(rng, 3, rng.uniform(0, 6));
      if (trial % 3 == 0) {
        const BraidWord q = random_pure_braid(rng, 3, rng.uniform(0, 4));
        p = p * q * p.inverse() * q.inverse();  // commutators are 2-loose
      }
      const WindingData w = p.winding();
      const bool zero = w.pair(1, 2) == 0 && w.pair(1, 3) == 0 && w.pair(2, 3) == 0;
      CHECK(p.is_m_loose(2) == zero);
    }
  }
  SECTION("looseness transfers along cloning in both directions") {
    Rng rng(20);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = rng.uniform(2, 4);
      BraidWord p = random_pure_braid(rng, n, rng.uniform(0, 5));
      if (trial % 2 == 0) {
        const BraidWord q = random_pure_braid(rng, n, rng.uniform(0, 4));
        p = p * q * p.inverse() * q.inverse();
      }
      const int m = rng.uniform(1, n);
      const int k = rng.uniform(1, n);
      CHECK(p.is_m_loose(m) == p.clone(k).is_m_loose(m));
    }
  }
  CHECK_THROWS_AS(BraidWord(2, {1}).is_m_loose(1), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord::identity(2).is_m_loose(3), std::invalid_argument);
}

TEST_CASE("braid word text format") {
  CHECK(BraidWord::parse("B3:1,2,-1").str() == "B3:1,2,-1");
  CHECK(BraidWord::parse("1,2,-1", 3) == BraidWord(3, {1, 2, -1}));
  CHECK(BraidWord::parse("B4:") == BraidWord::identity(4));
  CHECK(BraidWord::parse("", 2) == BraidWord::identity(2));
  CHECK_THROWS_AS(BraidWord::parse("1,2"), ParseError);       // no strand count
  CHECK_THROWS_AS(BraidWord::parse("B2:2"), ParseError);      // letter too large
  CHECK_THROWS_AS(BraidWord::parse("B3:1,,2"), ParseError);
  CHECK_THROWS_AS(BraidWord::parse("Bx:1"), ParseError);
}

TEST_CASE("free reduction keeps words short") {
  const BraidWord b = BraidWord(3, {1, 2, -2, -1, 1});
  CHECK(b.letters() == std::vector<int>{1});
  CHECK((b * b.inverse()).letters().empty());
}
