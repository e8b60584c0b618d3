// Without squaring, the loop map fails to be injective on <a, b, c | [a, c]>.

#include <iostream>

#include "halobraid.hpp"

int main() {
  using namespace halobraid;
  SimpleGraph delta = squaring_counterexample_delta();
  CounterexampleReport r = squaring_counterexample(delta);
  RaagPresentation p(delta);
  std::cout << std::boolalpha
            << "g = " << format_word(r.g, p) << '\n'
            << "g trivial:              " << r.g_trivial << '\n'
            << "unsquared image trivial: " << r.unsquared_trivial << '\n'
            << "squared image trivial:   " << r.squared_trivial << '\n';
  return r.reproduced() ? 0 : 1;
}
