#include <catch2/catch_amalgamated.hpp>

#include "braidthom/sampling.hpp"
#include "braidthom/tree.hpp"

using namespace braidthom;

TEST_CASE("tree parsing and canonical serialization") {
  CHECK(Tree::parse("•").leaf_count() == 1);
  CHECK(Tree::parse(".").leaf_count() == 1);
  CHECK(Tree::parse(" ( . ( . . ) ) ").str() == "(•(••))");

  const Tree t = Tree::parse("((••)•)");
  CHECK(t.leaf_count() == 3);
  CHECK(t.left_depth() == 2);
  CHECK(t.right_depth() == 1);

  CHECK(Tree::parse("(•(••))").str() == "(•(••))");

  CHECK_THROWS_AS(Tree::parse("((..)"), ParseError);
  CHECK_THROWS_AS(Tree::parse(". ."), ParseError);
  CHECK_THROWS_AS(Tree::parse("(.)"), ParseError);
  CHECK_THROWS_AS(Tree::parse(""), ParseError);
  try {
    Tree::parse("((..)x)");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("tree metrics") {
  SECTION("trivial tree") {
    const Tree t = Tree::leaf();
    CHECK(t.leaf_count() == 1);
    CHECK(t.left_depth() == 0);
    CHECK(t.right_depth() == 0);
    const auto iv = t.leaf_intervals();
    REQUIRE(iv.size() == 1);
    CHECK(iv[0] == DyadicInterval::whole());
  }
  SECTION("left caret chain") {
    const auto iv = Tree::parse("((..).)").leaf_intervals();
    REQUIRE(iv.size() == 3);
    CHECK(iv[0].str() == "[0,1/4]");
    CHECK(iv[1].str() == "[1/4,1/2]");
    CHECK(iv[2].str() == "[1/2,1]");
  }
  SECTION("all-right tree") {
    const Tree r4 = Tree::all_right(4);
    CHECK(r4.leaf_count() == 4);
    CHECK(r4.left_depth() == 1);
    CHECK(r4.right_depth() == 3);
    const auto iv = r4.leaf_intervals();
    CHECK(iv[0].str() == "[0,1/2]");
    CHECK(iv[1].str() == "[1/2,3/4]");
    CHECK(iv[2].str() == "[3/4,7/8]");
    CHECK(iv[3].str() == "[7/8,1]");
  }
  SECTION("leaf intervals partition [0,1]") {
    Rng rng(1);
    for (int trial = 0; trial < 25; ++trial) {
      const auto iv = random_tree(rng, rng.uniform(1, 9)).leaf_intervals();
      CHECK(iv.front().lo() == Dyadic::zero());
      CHECK(iv.back().hi() == Dyadic::one());
      for (std::size_t k = 0; k + 1 < iv.size(); ++k) CHECK(iv[k].hi() == iv[k + 1].lo());
    }
  }
}

TEST_CASE("caret attachment") {
  const Tree pair = Tree::parse("(..)");
  CHECK(pair.attach_caret(1).str() == Tree::parse("((..).)").str());

  SECTION("iterated attachment from the trivial tree") {
    const Forest f = Forest::from_carets(1, std::vector<int>{1, 1});
    CHECK(attach(Tree::leaf(), f) == Tree::parse("((..).)"));
  }
  SECTION("the same forest from two caret orders") {
    const Forest a = Forest::from_carets(2, std::vector<int>{2, 1});
    const Forest b = Forest::from_carets(2, std::vector<int>{1, 3});
    CHECK(a == b);
    CHECK(attach(pair, a) == attach(pair, b));
    CHECK(attach(pair, a).leaf_count() == 4);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(attach(pair, Forest::trivial(3)), std::invalid_argument);
    CHECK_THROWS_AS(Forest::from_carets(2, std::vector<int>{3}), std::invalid_argument);
    CHECK_THROWS_AS(Forest::from_carets(2, std::vector<int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(pair.attach_caret(3), std::invalid_argument);
  }
  SECTION("caret sequences round-trip through normalization") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const int roots = rng.uniform(1, 4);
      std::vector<int> ks;
      for (int i = 0; i < rng.uniform(0, 5); ++i)
        ks.push_back(rng.uniform(1, roots + static_cast<int>(ks.size())));
      const Forest f = Forest::from_carets(roots, ks);
      CHECK(Forest::from_carets(roots, f.carets()) == f);
      if (roots == 1) CHECK(attach(Tree::leaf(), f) == f.tree(1));
    }
  }
}

TEST_CASE("common refinement") {
  SECTION("idempotent on equal trees") {
    const Tree t = Tree::parse("((..)(..))");
    const auto [phi, psi] = common_refinement(t, t);
    CHECK(phi.is_trivial());
    CHECK(psi.is_trivial());
  }
  SECTION("the two 3-leaf trees") {
    const Tree t = Tree::parse("((..).)");
    const Tree s = Tree::parse("(.(..))");
    const auto [phi, psi] = common_refinement(t, s);
    CHECK(phi.carets() == std::vector<int>{3});
    CHECK(psi.carets() == std::vector<int>{1});
    CHECK(attach(t, phi) == Tree::parse("((..)(..))"));
    CHECK(attach(s, psi) == Tree::parse("((..)(..))"));
  }
  SECTION("refining the trivial tree") {
    const Tree t = Tree::parse("(.((..).))");
    const auto [phi, psi] = common_refinement(Tree::leaf(), t);
    CHECK(psi.is_trivial());
    CHECK(attach(Tree::leaf(), phi) == t);
  }
  SECTION("random pairs meet at the same tree") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const Tree t = random_tree(rng, rng.uniform(1, 6));
      const Tree s = random_tree(rng, rng.uniform(1, 6));
      const auto [phi, psi] = common_refinement(t, s);
      const Tree u = attach(t, phi);
      CHECK(u == attach(s, psi));
      CHECK(u.refines(t));
      CHECK(u.refines(s));
    }
  }
  SECTION("minimality by exhaustive search") {
    std::vector<Tree> small;
    for (int n = 1; n <= 4; ++n)
      for (const auto& t : all_trees(n)) small.push_back(t);
    std::vector<Tree> candidates;
    for (int n = 1; n <= 6; ++n)
      for (const auto& t : all_trees(n)) candidates.push_back(t);
    for (const auto& t : small)
      for (const auto& s : small) {
        const Tree u = attach(t, common_refinement(t, s).first);
        for (const auto& r : candidates)
          if (r.leaf_count() < u.leaf_count()) CHECK(!(r.refines(t) && r.refines(s)));
      }
  }
}

TEST_CASE("trees from cut points") {
  const Tree t = tree_with_cuts({Dyadic(1, 2), Dyadic(1, 1)});
  CHECK(t == Tree::parse("((..).)"));
  CHECK_THROWS_AS(tree_with_cuts({Dyadic::zero()}), std::invalid_argument);

  const auto [s, idx] = tree_with_leaf(DyadicInterval(3, 3));  // [3/8, 1/2]
  const auto iv = s.leaf_intervals();
  CHECK(iv[static_cast<std::size_t>(idx - 1)] == DyadicInterval(3, 3));
}

TEST_CASE("tree enumeration counts Catalan numbers") {
  CHECK(all_trees(1).size() == 1);
  CHECK(all_trees(2).size() == 1);
  CHECK(all_trees(3).size() == 2);
  CHECK(all_trees(4).size() == 5);
  CHECK(all_trees(5).size() == 14);
  CHECK(all_trees(6).size() == 42);
}
