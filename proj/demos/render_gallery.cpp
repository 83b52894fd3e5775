// Renders a few generator diagrams to SVG files in the current directory.

#include <cstdio>
#include <fstream>

#include "braidthom/gens.hpp"
#include "braidthom/render.hpp"

using namespace braidthom;

int main() {
  const std::pair<const char*, Diagram> gallery[] = {
      {"x0.svg", generator(gen_x(0))},
      {"sigma3.svg", generator(gen_sigma(3))},
      {"tau4.svg", generator(gen_tau(4))},
      {"alpha24.svg", generator(gen_alpha(2, 4))},
      {"beta35.svg", generator(gen_beta(3, 5))},
      {"twist4.svg", Diagram::central_twist(Tree::all_right(4))},
  };
  for (const auto& [name, d] : gallery) {
    std::ofstream out(name, std::ios::binary);
    out << render_svg(d);
    std::printf("wrote %s (%d strands)\n", name, d.strands());
  }
  return 0;
}
