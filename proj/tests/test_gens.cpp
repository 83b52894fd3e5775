#include <catch2/catch_amalgamated.hpp>

#include "braidthom/gens.hpp"
#include "braidthom/sampling.hpp"

using namespace braidthom;

TEST_CASE("concrete generator diagrams") {
  SECTION("the smallest loop is the full twist on two strands") {
    const Diagram b12 = generator(gen_beta(1, 2));
    CHECK(b12.top() == Tree::all_right(2));
    CHECK(b12.bottom() == Tree::all_right(2));
    CHECK(b12.braid() == BraidWord::full_twist(2));
  }
  SECTION("alpha agrees with its crossing-word definition") {
    const Diagram via_word = eval_word({gen_sigma(1), gen_sigma(1)});
    CHECK(equal(generator(gen_alpha(1, 2)), via_word));
  }
  SECTION("classifications") {
    CHECK(generator(gen_sigma(1)).classify() == ElementClass::vbr);
    CHECK(generator(gen_tau(2)).classify() == ElementClass::vbr);
    CHECK(generator(gen_alpha(1, 2)).classify() == ElementClass::pure_kernel);
    CHECK(generator(gen_beta(1, 3)).classify() == ElementClass::pure_kernel);
    CHECK(generator(gen_x(1)).classify() == ElementClass::fbr);
  }
  SECTION("sigma leaves the last strand alone, tau uses it") {
    CHECK(generator(gen_sigma(2)).strands() == 4);
    CHECK(generator(gen_tau(2)).strands() == 3);
  }
  SECTION("index validation") {
    CHECK_THROWS_AS(gen_x(-1), std::invalid_argument);
    CHECK_THROWS_AS(gen_sigma(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_alpha(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_beta(3, 1), std::invalid_argument);
  }
}

TEST_CASE("loop generators match their crossing words") {
  // alpha_{i,j} = s_i ... s_{j-2} s_{j-1}^2 s_{j-2}^-1 ... s_i^-1 and the
  // same for beta with the last letter pair replaced by tau's.
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      GenWord wa, wb;
      for (int k = i; k <= j - 2; ++k) {
        wa.push_back(gen_sigma(k));
        wb.push_back(gen_sigma(k));
      }
      wa.push_back(gen_sigma(j - 1));
      wa.push_back(gen_sigma(j - 1));
      wb.push_back(gen_tau(j - 1));
      wb.push_back(gen_tau(j - 1));
      for (int k = j - 2; k >= i; --k) {
        wa.push_back(inv(gen_sigma(k)));
        wb.push_back(inv(gen_sigma(k)));
      }
      CHECK(equal(generator(gen_alpha(i, j)), eval_word(wa)));
      CHECK(equal(generator(gen_beta(i, j)), eval_word(wb)));
    }
}

TEST_CASE("word evaluation") {
  CHECK(eval_word({}).is_identity());
  CHECK(eval_word({gen_x(0), inv(gen_x(0))}).is_identity());
  CHECK(equal(eval_word({gen_tau(1), gen_x(0)}), eval_word({gen_sigma(1), gen_tau(2)})));
}

TEST_CASE("word grammar") {
  const GenWord w = parse_word("x0 S1 t2 a1,2 B1,3^-1");
  REQUIRE(w.size() == 5);
  CHECK(w[0] == gen_x(0));
  CHECK(w[1] == gen_sigma(1));
  CHECK(w[2] == gen_tau(2));
  CHECK(w[3] == gen_alpha(1, 2));
  CHECK(w[4] == inv(gen_beta(1, 3)));
  CHECK(parse_word("").empty());
  CHECK(parse_word("  \t ").empty());
  CHECK_THROWS_AS(parse_word("y1"), ParseError);
  CHECK_THROWS_AS(parse_word("a1"), ParseError);
  CHECK_THROWS_AS(parse_word("x0^2"), ParseError);
  CHECK_THROWS_AS(parse_word("b0,2"), ParseError);
  for (const auto& s : parse_word("x0 s1 t2 a1,2 b1,3^-1"))
    CHECK(parse_word(s.str()).at(0) == s);
}

TEST_CASE("relation suites") {
  SECTION("bound validation") {
    CHECK_THROWS_AS(run_relation_suite(Presentation::vbr, 2), std::invalid_argument);
  }
  SECTION("spot instances from the tables") {
    CHECK(equal(eval_word({gen_x(1), gen_x(0)}), eval_word({gen_x(0), gen_x(2)})));
    CHECK(equal(eval_word({gen_tau(1)}),
                eval_word({gen_x(0), gen_tau(2), gen_sigma(1)})));
    // conjugation of a2,3 by a1,2, in the handedness fixed by the suites
    CHECK(equal(eval_word({inv(gen_alpha(1, 2)), gen_alpha(2, 3), gen_alpha(1, 2)}),
                eval_word({gen_alpha(2, 3), gen_alpha(1, 3), gen_alpha(2, 3),
                           inv(gen_alpha(1, 3)), inv(gen_alpha(2, 3))})));
  }
  SECTION("both suites pass completely past the standard bound") {
    const SuiteReport v = run_relation_suite(Presentation::vbr, 7);
    CHECK(v.total > 0);
    CHECK(v.passed());
    const SuiteReport f = run_relation_suite(Presentation::fbr, 7);
    CHECK(f.total > 0);
    CHECK(f.passed());
  }
}

TEST_CASE("kernel generation by conjugated loops") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Diagram product = Diagram::identity();
    const int factors = rng.uniform(1, 3);
    for (int s = 0; s < factors; ++s) {
      const int i = rng.uniform(1, 3);
      const int j = rng.uniform(i + 1, 4);
      const GenSymbol loop = rng.coin() ? gen_alpha(i, j) : gen_beta(i, j);
      const Diagram f = random_f_element(rng, 2, rng.uniform(0, 3));
      product = product * (f * generator(loop) * f.inverse());
    }
    const ElementClass c = product.classify();
    CHECK((c == ElementClass::pure_kernel || c == ElementClass::identity));
  }
}

TEST_CASE("supported elements") {
  SECTION("the whole interval gives the basic generator") {
    CHECK(f_supported_on(Dyadic::zero(), Dyadic::one()) == generator(gen_x(0)));
  }
  SECTION("right-end supports give the shifted generators") {
    CHECK(f_supported_on(Dyadic(1, 1), Dyadic::one()) == generator(gen_x(1)));
    CHECK(f_supported_on(Dyadic(3, 2), Dyadic::one()) == generator(gen_x(2)));
  }
  SECTION("acts as the identity outside the interval") {
    const Diagram f = f_supported_on(Dyadic(1, 2), Dyadic(3, 2));  // [1/4, 3/4]
    CHECK(f.act(Dyadic(1, 3)) == Dyadic(1, 3));
    CHECK(f.act(Dyadic(1, 2)) == Dyadic(1, 2));
    CHECK(f.act(Dyadic(7, 3)) == Dyadic(7, 3));
    CHECK_FALSE(f.is_identity());
    const Characters c = f.characters();
    CHECK(c.phi0 == 0);
    CHECK(c.phi1 == 0);
  }
  SECTION("disjoint supports commute") {
    CHECK(commute(f_supported_on(Dyadic::zero(), Dyadic(1, 1)),
                  f_supported_on(Dyadic(1, 1), Dyadic::one())));
  }
  CHECK_THROWS_AS(f_supported_on(Dyadic(1, 1), Dyadic(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(f_supported_on(Dyadic(3, 2), Dyadic(1, 2)), std::invalid_argument);
}

TEST_CASE("fixing elements commute with kernel elements") {
  Rng rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    const Diagram g = random_pure_kernel(rng, rng.uniform(2, 4), rng.uniform(1, 5));
    const Diagram f = random_fixing(rng, g.essential_points());
    CHECK(commute(g, f));
  }
}

TEST_CASE("conjugator search") {
  Rng rng(33);
  int done = 0;
  for (int trial = 0; done < 20 && trial < 200; ++trial) {
    const Diagram g = random_pure_kernel(rng, rng.uniform(1, 4), rng.uniform(0, 5));
    const Diagram f = random_f_element(rng, 3, rng.uniform(1, 4));
    if (f.is_identity()) continue;
    ++done;
    const Diagram h = conjugator_search(g, f);
    CHECK(h.braid().is_trivial());
    CHECK(commute(h, g));
    CHECK_FALSE(commute(h, f));
  }
  REQUIRE(done == 20);

  SECTION("rejects bad inputs") {
    CHECK_THROWS_AS(conjugator_search(generator(gen_x(0)), generator(gen_x(1))),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjugator_search(Diagram::identity(), Diagram::identity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjugator_search(Diagram::identity(), generator(gen_sigma(1))),
                    std::invalid_argument);
  }
}
