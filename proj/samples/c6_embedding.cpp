// Embeds G(C_6) into the braid group of two strands on its halo and prints
// the images of the generators.

#include <iostream>

#include "halobraid.hpp"

int main() {
  using namespace halobraid;
  SimpleGraph c6({"1", "2", "3", "4", "5", "6"},
                 {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
  Coloring coloring = chromatic_number(c6);
  EmbeddingContext ctx = build_context(c6, coloring);

  std::cout << "colors: " << coloring.color_count << '\n'
            << "halo: " << ctx.halo.gamma.order() << " vertices, planar "
            << std::boolalpha << is_planar(build_halo(c6, coloring).gamma) << '\n';
  for (auto const& a : c6.vertices()) {
    GroupWord w{letter(ctx.a_delta, a)};
    std::cout << a << " -> " << format_word(phi_psi(w, ctx), ctx.a_gamma) << '\n';
  }
  std::cout << "relators map to the identity: " << check_homomorphism(ctx).passed() << '\n';
}
