// A short tour: the character duality matrix, two commutators that decide
// commutation by essential points, and the non-hopfian projection.

#include <cstdio>

#include "braidthom/bns.hpp"
#include "braidthom/gens.hpp"

using namespace braidthom;

int main() {
  const Diagram e1 = eval_word({gen_x(1), inv(gen_x(0))});
  const Diagram e2 = generator(inv(gen_x(1)));
  const Diagram e3 = generator(gen_beta(1, 3));
  const Diagram e4 = generator(gen_alpha(1, 2));
  const Character chars[] = {Character::phi0(), Character::phi1(), Character::omega0(),
                             Character::omega1()};
  const char* names[] = {"phi0  ", "phi1  ", "omega0", "omega1"};

  std::printf("duality matrix (rows: characters, columns: basis elements):\n");
  for (int r = 0; r < 4; ++r) {
    std::printf("  %s |", names[r]);
    for (const Diagram* d : {&e1, &e2, &e3, &e4})
      std::printf(" %2s", evaluate(chars[r], *d).str().c_str());
    std::printf("\n");
  }

  const Diagram x1 = generator(gen_x(1));
  std::printf("\n[x1, b1,2] trivial: %s (x1 fixes 1/2)\n",
              commute(x1, generator(gen_beta(1, 2))) ? "yes" : "no");
  std::printf("[x1, b2,3] trivial: %s (x1 moves 3/4)\n",
              commute(x1, generator(gen_beta(2, 3))) ? "yes" : "no");

  const Tree t = Tree::parse("((••)(••))");
  const Diagram tw = Diagram::central_twist(t);
  std::printf("\nleft restriction of the twist on %s is the twist on %s: %s\n", t.str().c_str(),
              t.left().str().c_str(),
              equal(tw.left_restriction(), Diagram::central_twist(t.left())) ? "yes" : "no");
  std::printf("left restriction kills a1,2: %s\n",
              generator(gen_alpha(1, 2)).left_restriction().is_identity() ? "yes" : "no");
  return 0;
}
